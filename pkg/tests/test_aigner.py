import pytest

from trinomia.aigner import (
    RecursiveSpec,
    binomial_transform_seq,
    catalan_like,
    catalan_like_sequence,
    hankel_det,
    hankel_residual,
    hankel_transform,
    recursive_matrix,
    tbc_hankel_closed_form,
    verify_fundamental,
)
from trinomia.linalg import det, is_zero_matrix
from trinomia.positivity import j_leading_minors
from trinomia.seqgen import motzkin_sequence, tbc_sequence, tbc_triangle


def test_recursive_matrices(bc):
    b, c = bc
    assert recursive_matrix(RecursiveSpec.tbc(b, c), 6) == tbc_triangle(b, c, 6)
    m = recursive_matrix(RecursiveSpec.mbc(b, c), 6)
    assert m.column(0) == motzkin_sequence(b, c, 6)
    ident = recursive_matrix(RecursiveSpec.constant(0, 0), 4)
    assert all(ident[n, k] == (n == k) for n in range(5) for k in range(n + 1))


def test_catalan_like():
    assert catalan_like(RecursiveSpec.tbc(1, 1), 5) == 51
    assert catalan_like(RecursiveSpec.mbc(1, 1), 4) == 9
    assert catalan_like(RecursiveSpec((3,), 5, (7,), 2), 0) == 1
    assert catalan_like_sequence(RecursiveSpec.tbc(2, 1), 5) == tbc_sequence(2, 1, 5)


def test_fundamental_theorem(bc):
    b, c = bc
    assert verify_fundamental(RecursiveSpec.tbc(b, c), 1, 1) == b * b + 2 * c
    spec = RecursiveSpec.tbc(b, c)
    R = recursive_matrix(spec, 6)
    for n in range(6):
        assert verify_fundamental(spec, 0, n) == R[n, 0]
    assert verify_fundamental(RecursiveSpec.mbc(1, 1), 2, 2) == 9


def test_fundamental_theorem_with_irregular_weights():
    spec = RecursiveSpec((1, 4, 0), 2, (3, 5), 1)
    for m in range(6):
        for n in range(6 - m):
            verify_fundamental(spec, m, n)
    assert is_zero_matrix(hankel_residual(spec, 5))


def test_hankel_examples(bc):
    b, c = bc
    T = tbc_sequence(b, c, 12)
    assert hankel_det(T, 1) == 2 * c
    assert hankel_det(tbc_sequence(1, 1, 6), 2) == 4
    assert hankel_det([1] * 6, 1) == 0
    assert hankel_transform(T, 3) == [1, 2 * c, 4 * c**3, 8 * c**6]
    for n in range(6):
        assert hankel_det(T, n) == tbc_hankel_closed_form(c, n)
        assert hankel_det(T, n) == det([[T[i + j] for j in range(n + 1)] for i in range(n + 1)])


def test_shifted_hankel(bc):
    b, c = bc
    T = tbc_sequence(b, c, 14)
    u = j_leading_minors(b, c, 6)
    for n in range(7):
        assert hankel_det(T, n, shift=1) == tbc_hankel_closed_form(c, n) * u[n]


def test_binomial_transform_seq():
    assert binomial_transform_seq(tbc_sequence(1, 1, 3), 3) == [1, 2, 6, 20]
    assert binomial_transform_seq([0] * 5, 4) == [0] * 5


def test_short_sequence_rejected():
    with pytest.raises((ValueError, IndexError)):
        hankel_det([1, 2], 2)

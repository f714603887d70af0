from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from trinomia.aigner import RecursiveSpec, recursive_matrix
from trinomia.riordan import (
    AZPair,
    NotRiordanError,
    RiordanArray,
    TheoremViolation,
    binomial_transform,
    extract_az,
    ftra_sum,
    generalized_pascal,
    gf_from_az,
    mbc_riordan,
    quadratic_residual,
    riordan_matrix,
    tbc_riordan,
)
from trinomia.seqgen import (
    TriangleMatrix,
    motzkin_gf,
    pascal_triangle,
    tbc_gf,
    tbc_sequence,
    tbc_triangle,
    trinomial_expand_oracle,
)
from trinomia.series import TruncSeries


def test_identity_array():
    r = RiordanArray(TruncSeries.one(5), TruncSeries.one(5), 5)
    m = riordan_matrix(r)
    assert all(m[n, k] == (1 if n == k else 0) for n in range(6) for k in range(n + 1))


def test_tbc_array_rows(bc):
    b, c = bc
    m = riordan_matrix(tbc_riordan(b, c, 4))
    assert m.rows[4] == (b**4 + 12 * b * b * c + 6 * c * c, 4 * b**3 + 12 * b * c, 6 * b * b + 4 * c, 4 * b, 1)
    assert riordan_matrix(tbc_riordan(b, c, 8)) == tbc_triangle(b, c, 8)


def test_pascal_array():
    assert riordan_matrix(generalized_pascal(1, 4)) == pascal_triangle(1, 4)
    for n in range(5):
        assert pascal_triangle(1, 4).rows[n] == tuple(comb(n, k) for k in range(n + 1))


def test_depth_beyond_order_rejected():
    with pytest.raises(ValueError):
        riordan_matrix(RiordanArray(TruncSeries.one(3), TruncSeries.one(3), 5))


def test_ftra_examples():
    h = TruncSeries(tbc_sequence(1, 1, 4), 4)
    assert ftra_sum(generalized_pascal(1, 4), h, 2) == 6 == tbc_sequence(2, 1, 2)[2]
    r = tbc_riordan(1, 1, 4)
    assert ftra_sum(r, TruncSeries([1, 1, 1, 1, 1], 4), 2) == 6
    m = riordan_matrix(r)
    for n in range(5):
        assert ftra_sum(r, TruncSeries.one(4), n) == m[n, 0]


@given(
    st.lists(st.integers(-4, 4), min_size=5, max_size=5),
    st.lists(st.integers(-4, 4), min_size=5, max_size=5),
    st.lists(st.integers(-4, 4), min_size=5, max_size=5),
    st.integers(0, 4),
)
def test_ftra_random(g_tail, f_tail, h, n):
    g = TruncSeries([1] + g_tail, 5)
    f = TruncSeries([1] + f_tail, 5)
    ftra_sum(RiordanArray(g, f, 5), TruncSeries(h, 5), n)


def test_extract_az(bc):
    b, c = bc
    az = extract_az(tbc_triangle(b, c, 6))
    assert az.a_seq == (1, b, c) and az.z_seq == (b, 2 * c)
    mz = extract_az(recursive_matrix(RecursiveSpec.mbc(b, c), 6))
    assert mz.a_seq == (1, b, c) and mz.z_seq == (b, c)
    ident = TriangleMatrix.from_function(lambda n, k: int(n == k), 4)
    idz = extract_az(ident)
    assert idz.a_seq == (1,) and idz.z_seq == (0,)


def test_extract_az_rejects_bad_input():
    with pytest.raises(NotRiordanError):
        extract_az(TriangleMatrix(((2,), (1, 2))))
    # unit diagonal but column 1 does not follow an A-sequence
    bad = TriangleMatrix(((1,), (1, 1), (1, 2, 1), (1, 3, 7, 1)))
    with pytest.raises(NotRiordanError):
        extract_az(bad)


def test_gf_from_az(bc):
    b, c = bc
    r = gf_from_az(AZPair((1, b, c), (b, 2 * c)), 6)
    assert r.g == tbc_gf(b, c, 6)
    assert r.f == motzkin_gf(b, c, 6)
    assert list(r.f)[:3] == [1, b, b * b + c]
    r = gf_from_az(AZPair((1,), (0,)), 4)
    assert r.f == TruncSeries.one(4) and r.g == TruncSeries.one(4)
    r = gf_from_az(AZPair((1, b, c), (b, c)), 6)
    assert r.g == r.f == motzkin_gf(b, c, 6)
    assert riordan_matrix(mbc_riordan(b, c, 6)) == riordan_matrix(r)


def test_round_trip(bc):
    b, c = bc
    tri = tbc_triangle(b, c, 12)
    assert riordan_matrix(gf_from_az(extract_az(tri), 12)) == tri


def test_quadratic_residual(bc):
    b, c = bc
    f = motzkin_gf(b, c, 12)
    assert all(x == 0 for x in quadratic_residual(b, c, f))
    g = TruncSeries(list(f)[:5] + [0] * 8, 12)
    assert any(x != 0 for x in quadratic_residual(b, c, g))


def test_binomial_transform(bc):
    b, c = bc
    assert binomial_transform(1, 1, 1, 2) == 6
    assert binomial_transform(2, 1, 1, 3) == 45 == trinomial_expand_oracle(3, 1, 3)
    for n in range(6):
        assert binomial_transform(b, c, 0, n) == tbc_sequence(b, c, n)[n]
    for a in (1, 2, 3):
        for n in range(10):
            binomial_transform(b, c, a, n)


def test_violation_carries_both_sides():
    exc = TheoremViolation("x", 1, 2)
    assert exc.lhs == 1 and exc.rhs == 2

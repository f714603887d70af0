from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from trinomia.kernel import UniPoly
from trinomia.realroots import (
    NotRealRootedError,
    count_real_roots,
    count_roots,
    isolate_roots,
    is_real_rooted,
    sign_alternation,
    squarefree_part,
    strictly_interlaces,
    strictly_interlaces_by_merge,
    sturm_chain,
    verify_fisk,
)
from trinomia.seqgen import row_poly

x = UniPoly.x()


def P(*cs):
    return UniPoly(list(cs))


def test_count_roots_examples():
    assert count_roots(x * x - 1, -2, 2) == 2
    assert count_roots(P(1, 12, 6), -3, 0) == 2
    assert count_roots(P(1, 6), 0, 1) == 0


def test_counts_against_known_factorizations():
    f = (x - 1) * (x - 2) * (x + 3) * (x * x + 1)
    assert count_real_roots(f) == 3
    assert count_roots(f, 0, 2) == 2  # (0, 2] includes 2
    assert count_roots(f, 1, 2) == 1
    assert len(sturm_chain(f)) >= 2


def test_real_rootedness():
    assert is_real_rooted(P(1, 20, 30))
    assert not is_real_rooted(P(1, 1, 1))
    assert is_real_rooted((x + 1) * (x + 1))
    assert squarefree_part((x + 1) ** 3 * (x - 2)).monic() == ((x + 1) * (x - 2)).monic()


def test_isolation_of_g4():
    iv = isolate_roots(P(1, 12, 6), Fraction(1, 64))
    assert len(iv) == 2
    assert iv.max_width() <= Fraction(1, 64)
    # quadratic formula: -1 +- sqrt(30)/6
    r1, r2 = -1 + 30**0.5 / 6, -1 - 30**0.5 / 6
    (l1, h1), (l2, h2) = iv
    assert l1 <= r1 <= h1 and l2 <= r2 <= h2


def test_linear_isolation():
    assert isolate_roots(P(1, 6)).contains(0, Fraction(-1, 6))
    assert isolate_roots(P(1, 2)).contains(0, Fraction(-1, 2))


def test_isolation_rejects_complex_roots():
    with pytest.raises(NotRealRootedError):
        isolate_roots(P(1, 1, 1))


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=6, unique=True))
def test_isolation_finds_integer_roots(roots):
    f = UniPoly([1])
    for r in roots:
        f = f * (x - r)
    iv = isolate_roots(f, Fraction(1, 8))
    assert len(iv) == len(roots)
    for i, r in enumerate(sorted(roots, reverse=True)):
        assert iv.contains(i, r)


def test_interlacing_examples():
    g3, g4, g5 = row_poly(3), row_poly(4), row_poly(5)
    assert strictly_interlaces(g3, g4)
    assert strictly_interlaces(g3, g5)
    assert not strictly_interlaces(x - 1, x - 1)
    assert not strictly_interlaces_by_merge(x - 1, x - 1)
    assert strictly_interlaces(UniPoly([1]), row_poly(2))


def test_interlacing_degree_mismatch():
    with pytest.raises(ValueError):
        strictly_interlaces(x, x**3 - x)


@given(st.lists(st.integers(-15, 15), min_size=2, max_size=6, unique=True), st.integers(-15, 15))
def test_two_interlacing_routes_agree(roots, shift):
    f = UniPoly([1])
    for r in roots:
        f = f * (x - r)
    g = f.derivative()  # Rolle: f' interlaces a squarefree real-rooted f
    assert strictly_interlaces(g, f)
    assert strictly_interlaces_by_merge(g, f)
    h = g.compose(x - Fraction(shift, 3))
    assert strictly_interlaces(h, f) == strictly_interlaces_by_merge(h, f)


def test_sign_alternation_small():
    assert all(sign_alternation(n) for n in range(2, 15))


def test_fisk_small():
    rep = verify_fisk(5)
    assert rep.passed
    rep = verify_fisk(2)
    assert rep.passed and rep.entries[1].fisk is True
    with pytest.raises(ValueError):
        verify_fisk(1)


def test_fisk_parallel_matches_serial():
    assert verify_fisk(12, jobs=2).entries == verify_fisk(12, jobs=1).entries

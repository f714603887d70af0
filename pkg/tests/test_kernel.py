from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from trinomia.kernel import (
    BiPoly,
    ParityError,
    UniPoly,
    UVPoly,
    basis_change_uv,
    bipoly_eval,
    exact_div,
    parity_of,
    symbols,
    uvpoly_nonneg,
)

small = st.integers(min_value=-5, max_value=5)
terms = st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)), st.integers(-9, 9), max_size=6)
bipolys = terms.map(BiPoly)


def test_printing_is_graded_lex():
    b, c = symbols()
    assert str(b**3 + 6 * b * c) == "b^3 + 6*b*c"
    assert str(b * b + 2 * c) == "b^2 + 2*c"


@given(bipolys, bipolys, bipolys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == 0


@given(bipolys, bipolys)
def test_exact_division_inverts_multiplication(p, q):
    if q.is_zero():
        return
    assert (p * q).exact_div(q) == p


def test_inexact_division_raises():
    b, c = symbols()
    with pytest.raises(ArithmeticError):
        (b * b + c).exact_div(b)
    assert exact_div(6, 3) == 2
    assert exact_div(1, 3) == Fraction(1, 3)


@given(bipolys, small, small)
def test_evaluation_is_a_homomorphism(p, x, y):
    b, c = symbols()
    q = p * p + b * p
    assert bipoly_eval(q, x, y) == bipoly_eval(p, x, y) ** 2 + x * bipoly_eval(p, x, y)


def test_evaluation_examples():
    b, c = symbols()
    assert bipoly_eval(b * b + 2 * c, 3, 2) == 13
    assert bipoly_eval(b * b + 2 * c, 2, 1) == 6
    assert bipoly_eval(7 + b * c, 0, 0) == 7


@given(bipolys)
def test_json_round_trip(p):
    assert BiPoly.from_json(p.to_json()) == p


def test_basis_change_examples():
    b, c = symbols()
    u, v = UVPoly.u(), UVPoly.v()
    assert basis_change_uv(b * b + 2 * c) == ("even", u + 4 * v)
    assert basis_change_uv(4 * b * c) == ("odd", 4 * v)
    delta2 = 2 * b**4 * c - 6 * b**2 * c**2 + 12 * c**3
    assert basis_change_uv(delta2) == ("even", 2 * u * u * v + 2 * u * v * v + 8 * v**3)


@given(terms, st.booleans(), st.sampled_from([1, 2]))
def test_basis_change_is_left_inverse_of_substitution(raw, odd, m):
    # build a parity-homogeneous polynomial, convert, substitute back
    p = BiPoly({(2 * i + int(odd), j): a for (i, j), a in raw.items()})
    form = basis_change_uv(p, m)
    assert form.substitute() == p


def test_mixed_parity_rejected():
    b, c = symbols()
    assert parity_of(b + c) is None
    with pytest.raises(ParityError):
        basis_change_uv(b + c)


def test_uvpoly_nonneg():
    u, v = UVPoly.u(), UVPoly.v()
    assert uvpoly_nonneg(2 * u * u * v + 2 * u * v * v + 8 * v**3)
    assert not uvpoly_nonneg(u - v)
    assert uvpoly_nonneg(UVPoly({}))


def test_derivatives():
    b, c = symbols()
    p = b**3 + 6 * b * c
    assert p.derivative(0) == 3 * b * b + 6 * c
    assert p.derivative(1) == 6 * b


@given(st.lists(small, min_size=1, max_size=6), st.lists(small, min_size=1, max_size=4))
def test_unipoly_division_algorithm(a, d):
    f, g = UniPoly(a), UniPoly(d)
    if g.is_zero():
        return
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.is_zero() or r.degree < g.degree


def test_unipoly_basics():
    x = UniPoly.x()
    f = (x + 1) * (x + 1)
    assert f.derivative() == 2 * x + 2
    assert f(Fraction(1, 2)) == Fraction(9, 4)
    assert f.gcd(f.derivative()).monic() == x + 1
    assert UniPoly([]).degree == float("-inf")

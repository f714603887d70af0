from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from trinomia.kernel import UniPoly, symbols
from trinomia.seqgen import (
    central_trinomials,
    laurent_entry,
    motzkin_number,
    motzkin_sequence,
    motzkin_triangle,
    pascal_triangle,
    row_poly,
    tbc_gf,
    tbc_number,
    tbc_number_direct,
    tbc_sequence,
    tbc_triangle,
    tnk_coeff,
    tnk_row,
    trinomial_expand_oracle,
    tu_matrix,
)


def test_tnk_examples():
    assert tnk_coeff(4, 1) == 12
    assert tnk_coeff(5, 2) == 30
    assert tnk_coeff(0, 0) == 1
    assert tnk_coeff(3, 2) == 0


def test_tnk_rows_match_closed_form():
    for n in range(25):
        assert tnk_row(n) == [comb(n, 2 * k) * comb(2 * k, k) for k in range(n // 2 + 1)]


def test_row_polynomials():
    x = UniPoly.x()
    assert row_poly(4) == 1 + 12 * x + 6 * x * x
    assert row_poly(2) == 1 + 2 * x
    # 2 G_2 = 3 G_1 + (4x - 1) G_0
    assert 2 * row_poly(2) == 3 * row_poly(1) + (4 * x - 1) * row_poly(0)
    assert row_poly(7)(1) == 393


def test_tu_matrix_display_rows():
    tri = tu_matrix(5)
    assert [tri[5, k] for k in range(3)] == [1, 20, 30]
    assert tri[4, 2] == 6


def test_numeric_values():
    assert tbc_number(1, 1, 5) == 51
    assert tbc_number(2, 1, 4) == 70
    assert tbc_number_direct(3, 2, 3) == 63
    assert tbc_number_direct(1, 1, 4) == 19
    assert trinomial_expand_oracle(1, 1, 2) == 3
    assert trinomial_expand_oracle(3, 2, 2) == 13


def test_symbolic_values(bc):
    b, c = bc
    assert tbc_number(b, c, 2) == b * b + 2 * c
    assert tbc_number_direct(b, c, 1) == b
    assert trinomial_expand_oracle(b, c, 0) == 1
    assert tbc_number(b, c, 3) == b**3 + 6 * b * c


def test_special_families():
    # central binomial and central Delannoy numbers
    assert tbc_sequence(2, 1, 10) == [comb(2 * n, n) for n in range(11)]
    delannoy = [sum(comb(n, k) * comb(n + k, k) for k in range(n + 1)) for n in range(11)]
    assert tbc_sequence(3, 2, 10) == delannoy


@given(st.integers(-4, 6), st.integers(-4, 6), st.integers(0, 14))
def test_four_routes_agree(b, c, n):
    # the three-term recurrence divides by n; a rational c is fine too
    v = tbc_number(b, c, n)
    assert v == tbc_number_direct(b, c, n) == trinomial_expand_oracle(b, c, n) == tbc_gf(b, c, n)[n]


def test_zero_b_recurrence():
    # b = 0 keeps only even terms: T_{2m}(0, c) = C(2m, m) c^m
    assert tbc_sequence(0, 3, 6) == [1, 0, 6, 0, 54, 0, 540]


def test_laurent_entries(bc):
    b, c = bc
    assert laurent_entry(3, 1, b, c) == 3 * b * b + 3 * c
    assert laurent_entry(4, 4, b, c) == 1
    assert laurent_entry(2, -1, b, c) == 2 * b * c
    assert laurent_entry(2, 3, b, c) == 0
    assert laurent_entry(2, -3, b, c) == 0


def test_laurent_matches_direct_convolution(bc):
    b, c = bc
    # coefficient of x^k in (x + b + c/x)^n by repeated multiplication
    row = {0: 1}
    for n in range(1, 6):
        new = {}
        for k, v in row.items():
            for shift, w in ((1, 1), (0, b), (-1, c)):
                new[k + shift] = new.get(k + shift, 0) + v * w
        row = new
        for k in range(-n, n + 1):
            assert laurent_entry(n, k, b, c) == row.get(k, 0)


def test_tbc_triangle_row_four(bc):
    b, c = bc
    tri = tbc_triangle(b, c, 4)
    assert tri.rows[4] == (b**4 + 12 * b * b * c + 6 * c * c, 4 * b**3 + 12 * b * c, 6 * b * b + 4 * c, 4 * b, 1)


def test_motzkin_numbers(bc):
    b, c = bc
    assert motzkin_sequence(1, 1, 5) == [1, 1, 2, 4, 9, 21]
    assert motzkin_number(1, 1, 4) == 9
    assert motzkin_number(b, c, 1) == b
    assert motzkin_number(b, c, 2) == b * b + c
    assert motzkin_triangle(1, 1, 5).column(0) == [1, 1, 2, 4, 9, 21]


def test_pascal_and_central_trinomials():
    assert pascal_triangle(1, 4).rows[4] == (1, 4, 6, 4, 1)
    assert central_trinomials(7) == (1, 1, 3, 7, 19, 51, 141, 393)


def test_csv_and_json():
    tri = tu_matrix(2)
    assert tri.to_csv() == "1\n1,0\n1,2,0\n"
    assert tri.to_json() == [["1"], ["1", "0"], ["1", "2", "0"]]


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        tbc_number(1, 1, -1)

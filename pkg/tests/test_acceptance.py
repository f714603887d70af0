"""Acceptance criteria 1-13, each checked exactly at full desk-scale bounds.

Every criterion prints one line ``[AC nn] PASS|FAIL  <title>  (<seconds>s)``.
Run with ``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import time
from fractions import Fraction

import pytest

from trinomia import aigner, limits, positivity, realroots, riordan, seqgen, structure
from trinomia.kernel import UniPoly, symbols

B, C = symbols()
GRID6 = [(b, c) for b in range(1, 7) for c in range(1, 7)]
GRID5 = [(b, c) for b in range(1, 6) for c in range(1, 6)]


def ac01():
    for n in range(16):
        vals = (
            seqgen.tbc_number(B, C, n),
            seqgen.tbc_number_direct(B, C, n),
            seqgen.trinomial_expand_oracle(B, C, n),
            seqgen.tbc_series_extract(B, C, n),
        )
        if any(v != vals[0] for v in vals):
            return False, f"symbolic mismatch at n={n}"
    for b, c in GRID6:
        rec = seqgen.tbc_sequence(b, c, 50)
        gf = seqgen.tbc_gf(b, c, 50)
        for n in range(51):
            vals = (rec[n], seqgen.tbc_number_direct(b, c, n), seqgen.trinomial_expand_oracle(b, c, n), gf[n])
            if any(v != vals[0] for v in vals):
                return False, f"mismatch at (b,c,n)=({b},{c},{n})"
    return True, "symbolic n<=15, grid {1..6}^2 n<=50"


def ac02():
    T = seqgen.tbc_sequence(B, C, 13)
    for n in range(7):
        if aigner.hankel_det(T, n) != aigner.tbc_hankel_closed_form(C, n):
            return False, f"symbolic n={n}"
    for b, c in GRID5:
        T = seqgen.tbc_sequence(b, c, 21)
        for n in range(11):
            if aigner.hankel_det(T, n) != 2**n * c ** (n * (n + 1) // 2):
                return False, f"numeric (b,c,n)=({b},{c},{n})"
    return True, "symbolic n<=6, numeric n<=10 on {1..5}^2"


def ac03():
    T = seqgen.tbc_sequence(B, C, 18)
    u = positivity.j_leading_minors(B, C, 8)
    for n in range(9):
        if aigner.hankel_det(T, n, shift=1) != 2**n * C ** (n * (n + 1) // 2) * u[n]:
            return False, f"n={n}"
    return True, "symbolic n<=8"


def ac04():
    rep = realroots.verify_fisk(60)
    if not rep.passed:
        return False, f"first failure n={rep.first_failure.n}"
    # independent route: root merging agrees with sign alternation
    for n in range(1, 61):
        gp = seqgen.row_poly(n + 1)
        if not realroots.strictly_interlaces_by_merge(seqgen.row_poly(n), gp):
            return False, f"merge route G_{n} vs G_{n + 1}"
    return True, "n<=60, two interlacing routes"


def ac05():
    tu = seqgen.tu_matrix(7).square(8)
    res = positivity.is_tp(tu)
    if not res.ok:
        return False, f"negative minor {res.witness}"
    for b, c in GRID6:
        if positivity.j_tp2_contiguous(b, c) != (b * b >= 2 * c):
            return False, f"TP2 of J at ({b},{c})"
    return True, f"{res.checked} minors of TU_8, TP2(J) on {{1..6}}^2"


def ac06():
    for b, c in GRID6:
        v = positivity.tbc_criteria(b, c, lc_prefix=12, sm_depth=10, check=False)
        if not v.consistent:
            return False, f"({b},{c}) {v.to_json()}"
    if positivity.tbc_criteria(2, 1).empirical_sm != positivity.SM:
        return False, "boundary (2,1)"
    return True, "{1..6}^2 incl. (2,1) -> SM"


def ac07():
    rep = structure.verify_tli(14)
    if not rep.passed:
        f = rep.failures[0]
        return False, f"(i,j)=({f.i},{f.j})"
    for e in rep.entries:
        if any(not isinstance(x, int) or x < 0 for _k, x in e.poly.items()):
            return False, f"non-integer coefficient at ({e.i},{e.j})"
    return True, f"{len(rep.entries)} pairs with i+j<=14"


def ac08():
    x = UniPoly.x()
    for n in range(11):
        f = structure.extract_fn(n)
        if f.degree != n or f.lc() != 1 or any(c < 0 or c.denominator != 1 for c in f.coeffs):
            return False, f"f_{n} = {f}"
    if structure.extract_fn(2) != x * x + x + 4:
        return False, "f_2"
    return True, "n<=10, f_2 = x^2+x+4"


def ac09():
    for a in (1, 2, 3):
        for n in range(16):
            riordan.binomial_transform(B, C, a, n)
    return True, "a in {1,2,3}, n<=15"


def ac10():
    tri = seqgen.tbc_triangle(B, C, 12)
    az = riordan.extract_az(tri)
    if az.a_seq != (1, B, C) or az.z_seq != (B, 2 * C):
        return False, f"A={az.a_seq} Z={az.z_seq}"
    arr = riordan.gf_from_az(az, 12)
    if riordan.riordan_matrix(arr) != tri:
        return False, "round trip"
    if any(x != 0 for x in riordan.quadratic_residual(B, C, arr.f)):
        return False, "quadratic residual"
    return True, "depth 12"


def ac11():
    spec = aigner.RecursiveSpec.tbc(B, C)
    for m in range(21):
        for n in range(21 - m):
            aigner.verify_fundamental(spec, m, n)
    return True, "m+n<=20"


def ac12():
    gap = 3 * limits.ratio_gap(5000)
    if gap > Fraction(2, 1000):
        return False, f"ratio gap {float(gap):.3g}"
    st = limits.moment_stats(2000)
    dev = abs(18 * st.sigma2 / 2000 - 1)
    if dev > Fraction(2, 100):
        return False, f"variance deviation {float(dev):.3g}"
    rep = limits.limits_ladder([200, 800, 3200])
    if not rep.llt_decreasing:
        return False, f"LLT gaps {rep.llt}"
    if rep.clt[-1] > 0.05:
        return False, f"CLT gap {rep.clt[-1]:.3g}"
    return True, (
        f"3*gap={float(gap):.2e}, |18s^2/n-1|={float(dev):.2e}, "
        f"LLT {', '.join(f'{g:.4f}' for g in rep.llt)}, CLT {rep.clt[-1]:.4f}"
    )


def ac13():
    rep = structure.motzkin_suite(12, 12)
    if not rep.passed:
        return False, "; ".join(rep.problems) or "minor factorization"
    return True, "n<=12, i+j<=12"


CRITERIA = [
    (1, "generator cross-agreement", ac01, 30),
    (2, "Hankel determinant identity", ac02, 10),
    (3, "shifted Hankel identity", ac03, None),
    (4, "real roots and interlacing", ac04, 60),
    (5, "total positivity", ac05, 10),
    (6, "log-convexity / Stieltjes criteria", ac06, None),
    (7, "parity factorization of Hankel 2x2 minors", ac07, 60),
    (8, "monic nonnegative f_n", ac08, None),
    (9, "binomial transform", ac09, None),
    (10, "Riordan identification", ac10, None),
    (11, "fundamental theorem of recursive matrices", ac11, None),
    (12, "limit witnessing", ac12, 120),
    (13, "Motzkin analogues", ac13, None),
]


def evaluate(fn, budget):
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except (AssertionError, ArithmeticError, ValueError) as exc:
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - t0
    if ok and budget is not None and elapsed > budget:
        ok, detail = False, f"{detail}; over the {budget}s budget"
    return ok, detail, elapsed


def line(num, title, ok, detail, elapsed):
    return f"[AC {num:02d}] {'PASS' if ok else 'FAIL'}  {title}  ({elapsed:.2f}s)  {detail}"


@pytest.mark.parametrize("num,title,fn,budget", CRITERIA, ids=[f"ac{c[0]:02d}" for c in CRITERIA])
def test_acceptance(num, title, fn, budget, capsys):
    ok, detail, elapsed = evaluate(fn, budget)
    with capsys.disabled():
        print("\n" + line(num, title, ok, detail, elapsed))
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for num, title, fn, budget in CRITERIA:
        ok, detail, elapsed = evaluate(fn, budget)
        failed += not ok
        print(line(num, title, ok, detail, elapsed), flush=True)
    raise SystemExit(1 if failed else 0)

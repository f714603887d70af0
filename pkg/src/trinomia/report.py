"""Verification suites and the machine-readable report they produce.

Every suite returns a list of :class:`Check` records.  Exact values are
stored as decimal strings (or BiPoly term lists); floats only appear under
a ``display`` key.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import aigner, limits, positivity, realroots, riordan, seqgen, structure
from .kernel import BiPoly, symbols

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"


def _val(x):
    if isinstance(x, BiPoly):
        return x.to_json()
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, (int, Fraction)):
        return str(x)
    return x


@dataclass
class Check:
    name: str
    params: dict
    verdict: str
    values: dict = field(default_factory=dict)
    witness: dict | None = None
    display: dict | None = None

    def to_json(self) -> dict:
        out = {"name": self.name, "params": self.params, "verdict": self.verdict}
        if self.values:
            out["values"] = {k: _val(v) for k, v in self.values.items()}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.display is not None:
            out["display"] = self.display
        return out


def _verdict(ok: bool) -> str:
    return PASS if ok else FAIL


def _guard(name: str, params: dict, fn: Callable[[], Check]) -> Check:
    """Turn any exception raised inside ``fn`` into a failing check."""
    try:
        return fn()
    except Exception as exc:  # a crashing verifier is a failed verification
        witness = {"error": str(exc), "type": type(exc).__name__}
        for side in ("lhs", "rhs"):
            v = getattr(exc, side, None)
            if v is not None:
                witness[side] = _val(v)
        return Check(name, params, FAIL, witness=witness)


@dataclass
class Report:
    suite: str
    checks: list[Check] = field(default_factory=list)
    wall_time: float = 0.0

    def summary(self) -> dict:
        counts = {PASS: 0, FAIL: 0, INCONCLUSIVE: 0}
        for c in self.checks:
            counts[c.verdict] += 1
        counts["total"] = len(self.checks)
        return counts

    @property
    def passed(self) -> bool:
        return all(c.verdict == PASS for c in self.checks)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "checks": [c.to_json() for c in self.checks],
            "summary": self.summary(),
            "wall_time": round(self.wall_time, 3),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    def to_csv_rows(self) -> list[list[str]]:
        rows = [["suite", "name", "verdict", "params"]]
        for c in self.checks:
            rows.append([self.suite, c.name, c.verdict, json.dumps(c.params, sort_keys=True)])
        return rows


def _grid(lo: int, hi: int) -> list[tuple[int, int]]:
    return [(b, c) for b in range(lo, hi + 1) for c in range(lo, hi + 1)]


# ---------------------------------------------------------------------------
# suites


def suite_generators(symbolic_n: int = 15, numeric_n: int = 50, grid_max: int = 6) -> list[Check]:
    """Recurrence, closed sum, trinomial expansion and series extraction agree."""
    b, c = symbols()
    checks = []

    def routes(bb, cc, n):
        rec = seqgen.tbc_sequence(bb, cc, n)
        gf = seqgen.tbc_gf(bb, cc, n)
        bad = []
        for k in range(n + 1):
            vals = (
                rec[k],
                seqgen.tbc_number_direct(bb, cc, k),
                seqgen.trinomial_expand_oracle(bb, cc, k),
                gf[k],
            )
            if any(v != vals[0] for v in vals[1:]):
                bad.append(k)
        return bad

    bad = routes(b, c, symbolic_n)
    checks.append(
        Check(
            "generators.symbolic",
            {"max_n": symbolic_n},
            _verdict(not bad),
            witness={"n": bad[0]} if bad else None,
        )
    )
    fails = []
    for bb, cc in _grid(1, grid_max):
        bad = routes(bb, cc, numeric_n)
        if bad:
            fails.append({"b": bb, "c": cc, "n": bad[0]})
    checks.append(
        Check(
            "generators.grid",
            {"max_n": numeric_n, "grid": f"1..{grid_max}"},
            _verdict(not fails),
            witness=fails[0] if fails else None,
        )
    )
    return checks


def suite_hankel(n: int = 6, symbolic: bool = True, numeric_n: int = 10, grid_max: int = 5,
                 b=None, c=None, shifted_n: int = 8) -> list[Check]:
    checks = []
    if symbolic:
        sb, sc = symbols()
        T = seqgen.tbc_sequence(sb, sc, 2 * max(n, shifted_n) + 2)
        for k in range(n + 1):
            got = aigner.hankel_det(T, k)
            exp = aigner.tbc_hankel_closed_form(sc, k)
            checks.append(Check("hankel.symbolic", {"n": k}, _verdict(got == exp),
                                {"expected": exp, "computed": got}))
        u = positivity.j_leading_minors(sb, sc, shifted_n)
        for k in range(shifted_n + 1):
            got = aigner.hankel_det(T, k, shift=1)
            exp = aigner.tbc_hankel_closed_form(sc, k) * u[k]
            checks.append(Check("hankel.shifted", {"n": k}, _verdict(got == exp),
                                {"expected": exp, "computed": got}))
        return checks
    points = [(b, c)] if b is not None and c is not None else _grid(1, grid_max)
    for bb, cc in points:
        T = seqgen.tbc_sequence(bb, cc, 2 * numeric_n + 1)
        bad = None
        for k in range(numeric_n + 1):
            got = aigner.hankel_det(T, k)
            exp = aigner.tbc_hankel_closed_form(cc, k)
            if got != exp:
                bad = {"n": k, "expected": str(exp), "computed": str(got)}
                break
        checks.append(Check("hankel.numeric", {"b": str(bb), "c": str(cc), "max_n": numeric_n},
                            _verdict(bad is None), witness=bad))
    return checks


def suite_interlace(max_n: int = 60, jobs: int = 1) -> list[Check]:
    rep = realroots.verify_fisk(max_n, jobs)
    checks = []
    for e in rep.entries:
        checks.append(
            Check(
                "interlace",
                {"n": e.n},
                _verdict(e.ok),
                {
                    "real_rooted": e.real_rooted,
                    "consecutive": e.consecutive,
                    "fisk": e.fisk,
                    "max_interval_width": e.max_width,
                },
            )
        )
    return checks


def suite_tp(rows: int = 8, grid_max: int = 6, jobs: int = 1) -> list[Check]:
    if rows > 10:
        raise ValueError("full-order TP checks are capped at 10x10")
    tu = seqgen.tu_matrix(rows - 1).square(rows)
    res = positivity.is_tp(tu, None, jobs)
    checks = [
        Check("tp.TU", {"size": rows}, _verdict(res.ok), {"minors_checked": res.checked},
              witness=res.witness.to_json() if res.witness else None)
    ]
    bad = []
    for bb, cc in _grid(1, grid_max):
        if positivity.j_tp2_contiguous(bb, cc, 10) != (bb * bb >= 2 * cc):
            bad.append({"b": bb, "c": cc})
    checks.append(Check("tp.J_tp2_grid", {"grid": f"1..{grid_max}", "size": 10}, _verdict(not bad),
                        witness=bad[0] if bad else None))
    return checks


def suite_sm(b=None, c=None, depth: int = 10, grid_max: int = 6) -> list[Check]:
    checks = []
    points = [(b, c)] if b is not None and c is not None else _grid(1, grid_max)
    for bb, cc in points:
        seq = seqgen.tbc_sequence(bb, cc, 2 * depth + 1)
        v = positivity.sm_check(seq, depth)
        expected = positivity.SM if bb * bb >= 4 * cc else positivity.NOT_SM
        verdict = PASS if v.verdict == expected else (INCONCLUSIVE if v.verdict == positivity.INCONCLUSIVE else FAIL)
        checks.append(Check("sm", {"b": str(bb), "c": str(cc), "depth": depth}, verdict,
                            {"empirical": v.verdict, "expected": expected},
                            witness=v.to_json().get("witness")))
    return checks


def suite_criteria(b=None, c=None, grid_max: int = 6) -> list[Check]:
    checks = []
    points = [(b, c)] if b is not None and c is not None else _grid(1, grid_max)
    for bb, cc in points:
        v = positivity.tbc_criteria(bb, cc, check=False)
        checks.append(Check("criteria", {"b": str(bb), "c": str(cc)}, _verdict(v.consistent), v.to_json()))
    return checks


def suite_riordan(depth: int = 12) -> list[Check]:
    b, c = symbols()
    checks = []
    tri = seqgen.tbc_triangle(b, c, depth)

    def az_check():
        az = riordan.extract_az(tri)
        ok = az.a_seq == (1, b, c) and az.z_seq == (b, 2 * c)
        return Check("riordan.extract_az", {"depth": depth}, _verdict(ok),
                     {"A": [_val(x) for x in az.a_seq], "Z": [_val(x) for x in az.z_seq]})

    def roundtrip():
        az = riordan.extract_az(tri)
        rebuilt = riordan.riordan_matrix(riordan.gf_from_az(az, depth))
        return Check("riordan.roundtrip", {"depth": depth}, _verdict(rebuilt == tri))

    def residual():
        f = riordan.gf_from_az(riordan.extract_az(tri), depth).f
        res = riordan.quadratic_residual(b, c, f)
        ok = all(x == 0 for x in res)
        return Check("riordan.quadratic_residual", {"order": depth}, _verdict(ok))

    def identification():
        ra = riordan.riordan_matrix(riordan.tbc_riordan(b, c, depth))
        rm = aigner.recursive_matrix(aigner.RecursiveSpec.tbc(b, c), depth)
        g = riordan.gf_from_az(riordan.extract_az(tri), depth).g
        ok = ra == tri and rm == tri and g == seqgen.tbc_gf(b, c, depth)
        return Check("riordan.tbc_identification", {"depth": depth}, _verdict(ok))

    def motzkin():
        m = aigner.recursive_matrix(aigner.RecursiveSpec.mbc(b, c), depth)
        az = riordan.extract_az(m)
        ok = (
            az.a_seq == (1, b, c)
            and az.z_seq == (b, c)
            and riordan.riordan_matrix(riordan.mbc_riordan(b, c, depth)) == m
        )
        return Check("riordan.mbc", {"depth": depth}, _verdict(ok))

    for name, fn in [("riordan.extract_az", az_check), ("riordan.roundtrip", roundtrip),
                     ("riordan.quadratic_residual", residual), ("riordan.tbc_identification", identification),
                     ("riordan.mbc", motzkin)]:
        checks.append(_guard(name, {"depth": depth}, fn))
    return checks


def suite_binomial(a_values: Sequence = (1, 2, 3), n: int = 15) -> list[Check]:
    b, c = symbols()
    checks = []
    for a in a_values:
        def run(a=a):
            for k in range(n + 1):
                riordan.binomial_transform(b, c, a, k)
            return Check("binomial", {"a": str(a), "max_n": n}, PASS)

        checks.append(_guard("binomial", {"a": str(a), "max_n": n}, run))
    return checks


def suite_tli(max_sum: int = 14, fn_max: int = 10, admissible_size: int = 8, induction_n: int = 6) -> list[Check]:
    checks = []
    rep = structure.verify_tli(max_sum)
    for e in rep.entries:
        checks.append(Check("tli", {"i": e.i, "j": e.j}, _verdict(e.ok), {"f_ij": e.to_json()},
                            witness=None if e.ok else {"minor": _val(e.value), "parity": e.parity}))
    for n in range(fn_max + 1):
        def run(n=n):
            f = structure.extract_fn(n)
            return Check("tli.f_n", {"n": n}, PASS, {"f_n": str(f)})

        checks.append(_guard("tli.f_n", {"n": n}, run))
    if admissible_size:
        for name, mat in [("J", structure.symbolic_j(admissible_size)),
                          ("Tbc", structure.symbolic_tbc(admissible_size - 1))]:
            r = structure.admissible_check(mat, admissible_size, name)
            checks.append(Check("tli.admissible", {"matrix": name, "size": admissible_size},
                                _verdict(r.passed), {"minors_checked": len(r.checks)},
                                witness=r.failures[0].to_json() if r.failures else None))
    for step in structure.tcb_induction(induction_n) if induction_n >= 0 else []:
        checks.append(Check("tli.induction", {"n": step.n}, _verdict(step.ok),
                            {"product": step.product_matches, "cauchy_binet": step.cauchy_binet,
                             "admissible": step.admissible}))
    return checks


def suite_motzkin(max_n: int = 12, max_sum: int | None = None) -> list[Check]:
    rep = structure.motzkin_suite(max_n, max_sum)
    checks = [
        Check("motzkin.derivative_c", {"max_n": max_n}, _verdict(rep.derivative_c)),
        Check("motzkin.derivative_b", {"max_n": max_n}, _verdict(rep.derivative_b)),
        Check("motzkin.binomial", {"max_n": max_n}, _verdict(rep.binomial)),
        Check("motzkin.minors", {"max_sum": rep.minors.max_sum}, _verdict(rep.minors.passed),
              witness={"failures": [e.to_json() for e in rep.minors.failures]} if not rep.minors.passed else None),
    ]
    for n in range(max_n + 1):
        g = rep.gn.get(n)
        checks.append(Check("motzkin.g_n", {"n": n}, _verdict(g is not None), {"g_n": str(g)} if g else {}))
    if rep.problems:
        checks.append(Check("motzkin.problems", {}, FAIL, witness={"problems": rep.problems}))
    return checks


def suite_limits(ladder: Sequence[int] = (200, 800, 3200), ratio_n: int = 5000, variance_n: int = 2000,
                 ratio_tol=Fraction(2, 1000), variance_tol=Fraction(2, 100), clt_tol: float = 0.05) -> list[Check]:
    checks = []
    gap = 3 * limits.ratio_gap(ratio_n)
    checks.append(Check("limits.ratio", {"n": ratio_n, "tol": str(ratio_tol)}, _verdict(gap <= ratio_tol),
                        {"gap": gap}, display={"gap": float(gap)}))
    st = limits.moment_stats(variance_n)
    dev = abs(18 * st.sigma2 / variance_n - 1)
    checks.append(Check("limits.variance", {"n": variance_n, "tol": str(variance_tol)},
                        _verdict(dev <= variance_tol), {"sigma2": st.sigma2},
                        display={"deviation": float(dev), "sigma2": float(st.sigma2)}))
    checks.append(Check("limits.identity_2plus1", {"n": variance_n}, _verdict(limits.identity_2plus1(variance_n))))
    rep = limits.limits_ladder(ladder)
    checks.append(Check("limits.llt_decreasing", {"ladder": list(ladder)}, _verdict(rep.llt_decreasing),
                        display={"llt": rep.llt}))
    top = ladder[-1]
    clt = rep.clt[-1]
    checks.append(Check("limits.clt", {"n": top, "tol": clt_tol}, _verdict(clt <= clt_tol),
                        display={"clt": rep.clt}))
    return checks


def suite_fundamental(max_sum: int = 20) -> list[Check]:
    b, c = symbols()
    spec = aigner.RecursiveSpec.tbc(b, c)
    checks = []
    for m in range(max_sum + 1):
        for n in range(max_sum - m + 1):
            def run(m=m, n=n):
                v = aigner.verify_fundamental(spec, m, n)
                return Check("fundamental", {"m": m, "n": n}, PASS, {"value": v})

            checks.append(_guard("fundamental", {"m": m, "n": n}, run))
    return checks


# ---------------------------------------------------------------------------
# profiles

PROFILES: dict[str, dict[str, Callable[[int], list[Check]]]] = {
    "quick": {
        "generators": lambda jobs: suite_generators(8, 20, 3),
        "hankel": lambda jobs: suite_hankel(4, True, shifted_n=4),
        "interlace": lambda jobs: suite_interlace(20, jobs),
        "tp": lambda jobs: suite_tp(6, 6, jobs),
        "criteria": lambda jobs: suite_criteria(),
        "riordan": lambda jobs: suite_riordan(8),
        "binomial": lambda jobs: suite_binomial((1, 2), 8),
        "tli": lambda jobs: suite_tli(8, 5, 6, 3),
        "motzkin": lambda jobs: suite_motzkin(6),
        "limits": lambda jobs: suite_limits((200, 800), 1000, 500),
        "fundamental": lambda jobs: suite_fundamental(10),
    },
    "full": {
        "generators": lambda jobs: suite_generators(15, 50, 6),
        "hankel": lambda jobs: suite_hankel(6, True, shifted_n=8) + suite_hankel(symbolic=False, numeric_n=10, grid_max=5),
        "interlace": lambda jobs: suite_interlace(60, jobs),
        "tp": lambda jobs: suite_tp(8, 6, jobs),
        "criteria": lambda jobs: suite_criteria(),
        "sm": lambda jobs: suite_sm(),
        "riordan": lambda jobs: suite_riordan(12),
        "binomial": lambda jobs: suite_binomial((1, 2, 3), 15),
        "tli": lambda jobs: suite_tli(14, 10, 8, 6),
        "motzkin": lambda jobs: suite_motzkin(12),
        "limits": lambda jobs: suite_limits(),
        "fundamental": lambda jobs: suite_fundamental(20),
    },
}


def run_suite(name: str, fn: Callable[[], list[Check]]) -> Report:
    t0 = time.perf_counter()
    checks = fn()
    return Report(name, checks, time.perf_counter() - t0)


def report_all(profile: str = "quick", suites: Iterable[str] | None = None, jobs: int = 1) -> Report:
    """Run every suite of ``profile`` (or the named subset) into one report."""
    table = PROFILES[profile]
    names = list(table) if suites is None else list(suites)
    unknown = [s for s in names if s not in table]
    if unknown:
        raise KeyError(f"unknown suite(s) for profile {profile!r}: {', '.join(unknown)}")
    t0 = time.perf_counter()
    checks: list[Check] = []
    for s in names:
        for chk in table[s](jobs):
            chk.params = {"suite": s, **chk.params}
            checks.append(chk)
    return Report(f"all:{profile}", checks, time.perf_counter() - t0)

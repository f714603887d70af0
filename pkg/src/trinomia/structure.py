"""Parity factorization of 2x2 minors in the basis ``u = b^2 - m c``, ``v = c``.

A matrix with entries in Z[b, c] is called *parity-admissible* here when
every order-2 minor with rows ``i0 < i1`` and columns ``j0 < j1`` equals

* ``f(b^2 - 2c, c)`` when ``i0 + i1 + j0 + j1`` is even, and
* ``b * g(b^2 - 2c, c)`` when it is odd,

with ``f`` and ``g`` having nonnegative integer coefficients.  The Hankel
matrix of ``T_n(b, c)`` has this property, which gives the nonnegative
factorizations of ``T_{i-1} T_{j+1} - T_i T_j`` checked below.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Sequence

from . import seqgen
from .kernel import BiPoly, ParityError, UniPoly, UVPoly, basis_change_uv, symbols, uvpoly_nonneg
from .linalg import matmul, minor2
from .positivity import j_matrix

B, C = symbols()


def _tseq(n: int) -> list[BiPoly]:
    return [BiPoly.coerce(x) for x in seqgen.tbc_sequence(B, C, n)]


def _mseq(n: int) -> list[BiPoly]:
    return [BiPoly.coerce(x) for x in seqgen.motzkin_sequence(B, C, n)]


def hankel_minor_poly(i0: int, i1: int, j0: int, j1: int) -> BiPoly:
    """``T_{i0+j0} T_{i1+j1} - T_{i0+j1} T_{i1+j0}``."""
    if not (i1 > i0 >= 0 and j1 > j0 >= 0):
        raise ValueError("need i1 > i0 >= 0 and j1 > j0 >= 0")
    t = _tseq(i1 + j1)
    return t[i0 + j0] * t[i1 + j1] - t[i0 + j1] * t[i1 + j0]


@dataclass
class MinorCheck:
    rows: tuple[int, int]
    cols: tuple[int, int]
    expected: str
    parity: str | None
    poly: UVPoly | None
    ok: bool
    value: BiPoly | None = None

    def to_json(self) -> dict:
        out = {
            "rows": list(self.rows),
            "cols": list(self.cols),
            "expected_parity": self.expected,
            "parity": self.parity,
            "ok": self.ok,
        }
        if self.poly is not None:
            out["poly"] = self.poly.to_json()
        if not self.ok and self.value is not None:
            out["value"] = self.value.to_json()
        return out


def _classify(value, index_sum: int, m: int, rows, cols) -> MinorCheck:
    expected = "odd" if index_sum % 2 else "even"
    value = BiPoly.coerce(value)
    if value.is_zero():
        return MinorCheck(rows, cols, expected, expected, UVPoly(), True)
    try:
        form = basis_change_uv(value, m)
    except ParityError:
        return MinorCheck(rows, cols, expected, None, None, False, value)
    ok = form.parity == expected and uvpoly_nonneg(form.poly)
    return MinorCheck(rows, cols, expected, form.parity, form.poly, ok, value)


@dataclass
class TLiEntry:
    i: int
    j: int
    parity: str | None
    poly: UVPoly | None
    ok: bool
    value: BiPoly | None = None

    def to_json(self) -> dict:
        out = {
            "i": self.i,
            "j": self.j,
            "parity": self.parity,
            "ok": self.ok,
            "poly": self.poly.to_json() if self.poly is not None else None,
        }
        if not self.ok and self.value is not None:
            out["value"] = self.value.to_json()
        return out


@dataclass
class TLiReport:
    max_sum: int
    entries: list[TLiEntry] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e.ok for e in self.entries)

    @property
    def failures(self) -> list[TLiEntry]:
        return [e for e in self.entries if not e.ok]


def _log_minor_report(seq: Sequence[BiPoly], max_sum: int, m: int) -> TLiReport:
    report = TLiReport(max_sum)
    for s in range(2, max_sum + 1):
        for i in range(1, s // 2 + 1):
            j = s - i
            delta = seq[i - 1] * seq[j + 1] - seq[i] * seq[j]
            chk = _classify(delta, i + j, m, (0, 1), (i - 1, j))
            report.entries.append(TLiEntry(i, j, chk.parity, chk.poly, chk.ok, None if chk.ok else BiPoly.coerce(delta)))
    return report


def verify_tli(max_sum: int) -> TLiReport:
    """``T_{i-1} T_{j+1} - T_i T_j = b^[i+j odd] f_ij(b^2 - 2c, c)``, ``f_ij >= 0``.

    Covers ``1 <= i <= j`` with ``i + j <= max_sum``.
    """
    if max_sum < 2:
        raise ValueError("max_sum must be >= 2")
    return _log_minor_report(_tseq(max_sum + 1), max_sum, 2)


class StructureViolation(AssertionError):
    pass


def _collect_f(q: UVPoly, n: int, scale: int) -> UniPoly:
    """Read ``f_n`` off ``q(u, v) = scale * v^(n+1) f_n(u / v)``."""
    coeffs = [0] * (n + 1)
    for (p, e), val in q.items():
        if p + e != n + 1 or e < 1:
            raise StructureViolation(f"term u^{p} v^{e} breaks homogeneity")
        if val % scale:
            raise StructureViolation(f"coefficient {val} not divisible by {scale}")
        coeffs[p] = val // scale
    return UniPoly(coeffs)


def _check_fn(f: UniPoly, n: int) -> None:
    if f.degree != n:
        raise StructureViolation(f"degree {f.degree} != {n}")
    if f.lc() != 1:
        raise StructureViolation("not monic")
    if any(c < 0 or c.denominator != 1 for c in f.coeffs):
        raise StructureViolation("coefficients are not nonnegative integers")


def extract_fn(n: int) -> UniPoly:
    """Monic ``f_n`` with ``T_n T_{n+2} - T_{n+1}^2 = 2 c^(n+1) f_n((b^2 - 2c) / c)``."""
    t = _tseq(n + 2)
    delta = t[n] * t[n + 2] - t[n + 1] * t[n + 1]
    form = basis_change_uv(delta, 2)
    if form.parity != "even":
        raise StructureViolation("Delta_n must be even in b")
    f = _collect_f(form.poly, n, 2)
    _check_fn(f, n)
    return f


def fn_reconstruct(f: UniPoly, n: int, m: int = 2, scale: int = 2) -> BiPoly:
    """``scale * c^(n+1) f((b^2 - m c)/c)`` expanded in ``b, c``."""
    u = B * B - m * C
    out = BiPoly.const(0)
    for k, a in enumerate(f.coeffs):
        out = out + int(a) * u ** k * C ** (n + 1 - k)
    return out * scale


# ---------------------------------------------------------------------------
# parity-admissible matrices


@dataclass
class AdmissibleReport:
    name: str
    size: int
    checks: list[MinorCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[MinorCheck]:
        return [c for c in self.checks if not c.ok]

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "size": self.size,
            "checked": len(self.checks),
            "passed": self.passed,
            "failures": [c.to_json() for c in self.failures],
        }


def admissible_check(m, size: int | None = None, name: str = "matrix", basis: int = 2) -> AdmissibleReport:
    """Check every order-2 minor of the leading ``size x size`` block."""
    if isinstance(m, seqgen.TriangleMatrix):
        size = m.depth + 1 if size is None else size
        mat = m.square(size)
    else:
        mat = [list(r) for r in m]
        size = len(mat) if size is None else size
        mat = [r[:size] for r in mat[:size]]
    if size > 10:
        raise ValueError("exhaustive order-2 enumeration is capped at 10x10")
    report = AdmissibleReport(name, size)
    ncols = len(mat[0]) if mat else 0
    for i0, i1 in combinations(range(len(mat)), 2):
        for j0, j1 in combinations(range(ncols), 2):
            v = minor2(mat, i0, i1, j0, j1)
            report.checks.append(_classify(v, i0 + i1 + j0 + j1, basis, (i0, i1), (j0, j1)))
    return report


def symbolic_j(size: int) -> list[list]:
    return j_matrix(B, C, size)


def symbolic_tbc(depth: int) -> seqgen.TriangleMatrix:
    return seqgen.tbc_triangle(B, C, depth)


def cauchy_binet_check(a: Sequence[Sequence], b: Sequence[Sequence], samples=None) -> bool:
    """Order-2 minors of ``a @ b`` equal their Cauchy-Binet sums.

    ``samples`` is an iterable of ``((i0, i1), (j0, j1))``; default is all.
    """
    ab = matmul(a, b)
    inner = len(b)
    if samples is None:
        samples = [
            (rows, cols)
            for rows in combinations(range(len(a)), 2)
            for cols in combinations(range(len(b[0])), 2)
        ]
    for (i0, i1), (j0, j1) in samples:
        lhs = minor2(ab, i0, i1, j0, j1)
        rhs = 0
        for k0, k1 in combinations(range(inner), 2):
            x = minor2(a, i0, i1, k0, k1)
            if x == 0:
                continue
            rhs = rhs + x * (b[k0][j0] * b[k1][j1] - b[k0][j1] * b[k1][j0])
        if lhs != rhs:
            return False
    return True


def l_star(n: int) -> list[list]:
    """``diag(1, L_n)`` with ``L_n`` the leading ``(n+1) x (n+1)`` block of Tbc."""
    L = symbolic_tbc(n).square(n + 1)
    out = [[1] + [0] * (n + 1)]
    for row in L:
        out.append([0] + list(row))
    return out


def j_star(n: int) -> list[list]:
    """``e`` on top of the first ``n+1`` rows of ``J`` cut to ``n+2`` columns."""
    J = j_matrix(B, C, n + 2)
    return [[1] + [0] * (n + 1)] + [list(J[r]) for r in range(n + 1)]


@dataclass
class InductionStep:
    n: int
    product_matches: bool
    cauchy_binet: bool
    admissible: bool

    @property
    def ok(self) -> bool:
        return self.product_matches and self.cauchy_binet and self.admissible


def tcb_induction(max_n: int) -> list[InductionStep]:
    """``L_{n+1} = L*_n J*_n`` and admissibility is kept, for ``n <= max_n``."""
    steps = []
    for n in range(max_n + 1):
        ls, js = l_star(n), j_star(n)
        prod = matmul(ls, js)
        target = symbolic_tbc(n + 1).square(n + 2)
        steps.append(
            InductionStep(
                n,
                prod == target,
                cauchy_binet_check(ls, js),
                admissible_check(prod, name=f"L_{n + 1}").passed,
            )
        )
    return steps


# ---------------------------------------------------------------------------
# Motzkin analogues


@dataclass
class MotzkinReport:
    max_n: int
    derivative_c: bool = True
    derivative_b: bool = True
    binomial: bool = True
    minors: TLiReport | None = None
    gn: dict[int, UniPoly] = field(default_factory=dict)
    problems: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (
            self.derivative_c
            and self.derivative_b
            and self.binomial
            and (self.minors is None or self.minors.passed)
            and not self.problems
        )


def motzkin_binomial(n: int) -> bool:
    """``sum_k C(n,k) M_k(b,c) a^(n-k) == M_n(a+b, c)`` as polynomials in ``a``.

    Both sides have degree ``n`` in ``a``; agreement at ``a = 0..n`` is
    agreement as polynomials.
    """
    m = _mseq(n)
    for a in range(n + 1):
        lhs = BiPoly.const(0)
        for k in range(n + 1):
            lhs = lhs + comb(n, k) * m[k] * a ** (n - k)
        if lhs != seqgen.motzkin_number(B + a, C, n):
            return False
    return True


def extract_gn(n: int) -> UniPoly:
    """Monic ``g_n`` with ``M_n M_{n+2} - M_{n+1}^2 = c^(n+1) g_n((b^2 - c)/c)``."""
    m = _mseq(n + 2)
    delta = m[n] * m[n + 2] - m[n + 1] * m[n + 1]
    form = basis_change_uv(delta, 1)
    if form.parity != "even":
        raise StructureViolation("Motzkin Delta_n must be even in b")
    g = _collect_f(form.poly, n, 1)
    _check_fn(g, n)
    return g


def motzkin_suite(max_n: int, max_sum: int | None = None) -> MotzkinReport:
    """The five Motzkin analogues, symbolically for ``n <= max_n``."""
    if max_n < 2:
        raise ValueError("max_n must be >= 2")
    max_sum = max_n if max_sum is None else max_sum
    rep = MotzkinReport(max_n)
    t = _tseq(max_n)
    m = _mseq(max(max_n, max_sum + 1))
    for n in range(max_n + 1):
        if (C * m[n]).derivative(1) != t[n]:
            rep.derivative_c = False
            rep.problems.append(f"d(c M_{n})/dc != T_{n}")
        if n >= 1:
            if t[n].derivative(0) != n * t[n - 1]:
                rep.derivative_b = False
                rep.problems.append(f"dT_{n}/db != {n} T_{n - 1}")
            if m[n].derivative(0) != n * m[n - 1]:
                rep.derivative_b = False
                rep.problems.append(f"dM_{n}/db != {n} M_{n - 1}")
        if not motzkin_binomial(n):
            rep.binomial = False
            rep.problems.append(f"binomial transform fails at n={n}")
        try:
            rep.gn[n] = extract_gn(n)
        except StructureViolation as exc:
            rep.problems.append(f"g_{n}: {exc}")
    rep.minors = _log_minor_report(m, max_sum, 1)
    return rep

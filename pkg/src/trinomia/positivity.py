"""Total positivity, finite PF sequences, log-convexity and Stieltjes moments.

Minor enumeration is exhaustive and exact, so it is exponential in the
matrix size; the CLI caps full-order checks at 10x10.

``sm_check`` is a semi-decision.  A verdict of ``"SM"`` only means that the
Hankel / shifted-Hankel determinant pattern of a Stieltjes moment sequence
holds up to the requested depth; the real criterion quantifies over every
order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .aigner import hankel_det
from .kernel import UniPoly, as_fraction, normalize
from .linalg import all_index_sets, det
from .realroots import is_real_rooted
from .riordan import TheoremViolation
from .seqgen import tbc_sequence


@dataclass(frozen=True)
class MinorReport:
    order: int
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    value: object

    def to_json(self) -> dict:
        return {"order": self.order, "rows": list(self.rows), "cols": list(self.cols), "value": str(self.value)}


@dataclass
class TPResult:
    ok: bool
    checked: int
    witness: MinorReport | None = None

    def __bool__(self):
        return self.ok


def _scan_order(m: Sequence[Sequence], r: int):
    nr, nc = len(m), len(m[0]) if m else 0
    checked = 0
    for rows, cols in all_index_sets(nr, nc, r):
        sub = [[m[i][j] for j in cols] for i in rows]
        v = det(sub)
        checked += 1
        if v < 0:
            return checked, MinorReport(r, rows, cols, normalize(v))
    return checked, None


def is_tp(m: Sequence[Sequence], max_order: int | None = None, jobs: int = 1) -> TPResult:
    """Every minor of order ``<= max_order`` is ``>= 0``.

    Stops at the first negative minor, taken in (order, rows, cols)
    lexicographic order, which is reported as the witness.
    """
    if not m:
        return TPResult(True, 0)
    size = min(len(m), len(m[0]))
    top = size if max_order is None else min(max_order, size)
    orders = list(range(1, top + 1))
    if jobs > 1:
        from .parallel import pmap

        results = pmap(_OrderScan(m), orders, jobs)
    else:
        results = []
        for r in orders:
            res = _scan_order(m, r)
            results.append(res)
            if res[1] is not None:
                break
    total = 0
    for checked, witness in results:
        total += checked
        if witness is not None:
            return TPResult(False, total, witness)
    return TPResult(True, total)


class _OrderScan:
    def __init__(self, m):
        self.m = [list(r) for r in m]

    def __call__(self, r):
        return _scan_order(self.m, r)


def toeplitz(seq: Sequence, size: int) -> list[list]:
    """Leading ``size x size`` block of ``[a_{n-k}]``."""
    return [[seq[n - k] if 0 <= n - k < len(seq) else 0 for k in range(size)] for n in range(size)]


def finite_pf_check(seq: Sequence) -> bool:
    """A finite nonnegative sequence is PF iff its generating polynomial is real-rooted."""
    vals = [as_fraction(x) for x in seq]
    if any(v < 0 for v in vals):
        raise ValueError("PF check needs nonnegative entries")
    poly = UniPoly(vals)
    if poly.is_zero():
        return True
    return is_real_rooted(poly)


@dataclass
class LogConvexResult:
    ok: bool
    first_failure: int | None = None

    def __bool__(self):
        return self.ok


def log_convex_check(seq: Sequence) -> LogConvexResult:
    """``a_{n-1} a_{n+1} >= a_n^2`` for every interior ``n``."""
    vals = list(seq)
    if any(v <= 0 for v in vals):
        raise ValueError("log-convexity check needs positive entries")
    for n in range(1, len(vals) - 1):
        if vals[n - 1] * vals[n + 1] < vals[n] * vals[n]:
            return LogConvexResult(False, n)
    return LogConvexResult(True)


def j_matrix(b, c, size: int) -> list[list]:
    """Leading block of the tridiagonal ``J``: diagonal ``b``, super 1, sub ``(2c, c, c, ...)``."""
    out = [[0] * size for _ in range(size)]
    for i in range(size):
        out[i][i] = b
        if i + 1 < size:
            out[i][i + 1] = 1
            out[i + 1][i] = 2 * c if i == 0 else c
    return out


def j_leading_minors(b, c, N: int, cross_check: int = 8) -> list:
    """``u_0..u_N``: ``u_0 = b``, ``u_1 = b^2 - 2c``, ``u_n = b u_{n-1} - c u_{n-2}``.

    The first ``cross_check + 1`` values are compared with Bareiss
    determinants of the leading blocks of ``J``.
    """
    u = [normalize(b)]
    if N >= 1:
        u.append(normalize(b * b - 2 * c))
    for n in range(2, N + 1):
        u.append(normalize(b * u[-1] - c * u[-2]))
    for n in range(min(N, cross_check) + 1):
        d = normalize(det(j_matrix(b, c, n + 1)))
        if d != u[n]:
            raise TheoremViolation(f"leading minor {n} of J disagrees with the recurrence", u[n], d)
    return u


def j_tp2_contiguous(b, c, size: int = 10) -> bool:
    """All contiguous 2x2 minors of the leading ``size x size`` block of ``J`` are ``>= 0``."""
    J = j_matrix(b, c, size)
    for i in range(size - 1):
        for j in range(size - 1):
            if J[i][j] * J[i + 1][j + 1] - J[i][j + 1] * J[i + 1][j] < 0:
                return False
    return True


SM = "SM"
NOT_SM = "not-SM"
INCONCLUSIVE = "inconclusive"


@dataclass
class SMVerdict:
    verdict: str
    depth: int
    hankel: list = field(default_factory=list)
    shifted: list = field(default_factory=list)
    witness: tuple[str, int] | None = None

    def to_json(self) -> dict:
        out = {
            "verdict": self.verdict,
            "depth": self.depth,
            "hankel": [str(x) for x in self.hankel],
            "shifted": [str(x) for x in self.shifted],
        }
        if self.witness:
            out["witness"] = {"matrix": self.witness[0], "n": self.witness[1]}
        return out


def _switch_index(vals: Sequence) -> int | None:
    """Length of the strictly positive prefix if the rest is all zero, else None."""
    m = 0
    while m < len(vals) and vals[m] > 0:
        m += 1
    if all(v == 0 for v in vals[m:]):
        return m
    return None


def sm_check(seq: Sequence, depth: int) -> SMVerdict:
    """Hankel-determinant test for a Stieltjes moment sequence, up to ``depth``.

    With ``h_n = det[a_{i+j}]`` and ``s_n = det[a_{i+j+1}]`` for ``n <= depth``:

    * any negative ``h_n`` or ``s_n``  -> ``"not-SM"``;
    * ``h`` and ``s`` each positive then identically zero, switching at
      ``m_h`` and ``m_s`` with ``m_h`` in ``{m_s, m_s + 1}`` -> ``"SM"``
      (``m_h = m_s + 1`` is a finitely supported measure with an atom at 0);
    * anything else -> ``"inconclusive"``.
    """
    if len(seq) < 2 * depth + 2:
        raise ValueError(f"need at least {2 * depth + 2} terms")
    h = [hankel_det(seq, n) for n in range(depth + 1)]
    s = [hankel_det(seq, n, shift=1) for n in range(depth + 1)]
    for n in range(depth + 1):
        if h[n] < 0:
            return SMVerdict(NOT_SM, depth, h, s, ("hankel", n))
        if s[n] < 0:
            return SMVerdict(NOT_SM, depth, h, s, ("shifted", n))
    mh, ms = _switch_index(h), _switch_index(s)
    if mh is not None and ms is not None:
        if mh == ms or mh == ms + 1 or (ms == depth + 1 and mh == depth + 1):
            return SMVerdict(SM, depth, h, s)
    return SMVerdict(INCONCLUSIVE, depth, h, s)


@dataclass
class CriteriaVerdict:
    b: object
    c: object
    log_convex: bool
    sm: bool
    empirical_log_convex: bool
    empirical_sm: str

    @property
    def consistent(self) -> bool:
        sm_ok = (self.empirical_sm == SM) if self.sm else (self.empirical_sm == NOT_SM)
        return self.log_convex == self.empirical_log_convex and sm_ok

    def to_json(self) -> dict:
        return {
            "b": str(self.b),
            "c": str(self.c),
            "log_convex": self.log_convex,
            "sm": self.sm,
            "empirical_log_convex": self.empirical_log_convex,
            "empirical_sm": self.empirical_sm,
            "consistent": self.consistent,
        }


def tbc_criteria(b, c, lc_prefix: int = 12, sm_depth: int = 10, check: bool = True) -> CriteriaVerdict:
    """Sign conditions ``b^2 >= 2c`` (log-convex) and ``b^2 >= 4c`` (SM) for ``b, c > 0``.

    Both are compared with the empirical verdicts on ``T_n(b, c)``; with
    ``check`` a disagreement raises :class:`TheoremViolation`.
    """
    b, c = normalize(as_fraction(b)), normalize(as_fraction(c))
    if b <= 0 or c <= 0:
        raise ValueError("b and c must be positive")
    seq = tbc_sequence(b, c, max(lc_prefix - 1, 2 * sm_depth + 1))
    verdict = CriteriaVerdict(
        b,
        c,
        b * b >= 2 * c,
        b * b >= 4 * c,
        log_convex_check(seq[:lc_prefix]).ok,
        sm_check(seq, sm_depth).verdict,
    )
    if check and not verdict.consistent:
        raise TheoremViolation(f"criteria disagree with the empirical verdicts at (b, c) = ({b}, {c})")
    return verdict

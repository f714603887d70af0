"""Row distributions ``p(n,k) = T(n,k) / T_n`` and their normal limits.

Means and variances are exact rationals.  For the Gaussian comparisons the
lattice point ``floor(mu + x sigma)`` is found exactly (``sigma`` is only
ever compared through its square); floats enter at the very end, when a
probability is set against the normal density or distribution function.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .kernel import as_fraction
from .riordan import TheoremViolation
from .seqgen import central_trinomials, tnk_row


@dataclass(frozen=True)
class MomentStats:
    n: int
    mu: Fraction
    sigma2: Fraction

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "mu": str(self.mu),
            "sigma2": str(self.sigma2),
            "mu_float": float(self.mu),
            "sigma2_float": float(self.sigma2),
        }


def _derivs_at_one(n: int) -> tuple[int, int, int]:
    row = tnk_row(n)
    g0 = sum(row)
    g1 = sum(k * a for k, a in enumerate(row))
    g2 = sum(k * (k - 1) * a for k, a in enumerate(row))
    return g0, g1, g2


def moment_stats(n: int, check: bool = True) -> MomentStats:
    """Mean and variance of ``p(n, .)`` from ``G_n(1), G_n'(1), G_n''(1)``.

    With ``check`` the mean is compared with ``n (T_n - T_{n-1}) / (2 T_n)``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    g0, g1, g2 = _derivs_at_one(n)
    mu = Fraction(g1, g0)
    sigma2 = Fraction(g2, g0) + mu - mu * mu
    if check:
        T = central_trinomials(n)
        closed = Fraction(n * (T[n] - T[n - 1]), 2 * T[n])
        if closed != mu:
            raise TheoremViolation(f"mean closed form fails at n={n}", mu, closed)
    return MomentStats(n, mu, sigma2)


def sigma2_closed(n: int) -> Fraction:
    """``n [4(n-1) T_{n-2} T_n - n T_n^2 + 2n T_{n-1} T_n - n T_{n-1}^2] / (4 T_n^2)``."""
    T = central_trinomials(n)
    a, b2, c2 = T[n], T[n - 1], T[n - 2]
    return Fraction(n * (4 * (n - 1) * c2 * a - n * a * a + 2 * n * b2 * a - n * b2 * b2), 4 * a * a)


def identity_2plus1(n: int) -> bool:
    """``G_n''(1) + G_n'(1) == n (n-1) T_{n-2}``; raises on mismatch."""
    if n < 2:
        raise ValueError("n must be >= 2")
    _g0, g1, g2 = _derivs_at_one(n)
    lhs = g2 + g1
    rhs = n * (n - 1) * central_trinomials(n)[n - 2]
    if lhs != rhs:
        raise TheoremViolation(f"second-moment identity fails at n={n}", lhs, rhs)
    return True


def ratio_gap(n: int) -> Fraction:
    """``|T_{n-1} / T_n - 1/3|``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    T = central_trinomials(n)
    return abs(Fraction(T[n - 1], T[n]) - Fraction(1, 3))


def floor_shift(mu: Fraction, sigma2: Fraction, x: Fraction) -> int:
    """``floor(mu + x * sqrt(sigma2))`` decided in exact arithmetic."""
    x = as_fraction(x)
    sq = x * x * sigma2  # (x sigma)^2

    def le(k: int) -> bool:
        # k <= mu + x sigma
        d = k - mu
        if x >= 0:
            return d <= 0 or d * d <= sq
        return d <= 0 and d * d >= sq

    approx = float(mu) + float(x) * math.sqrt(float(sigma2))
    k = math.floor(approx)
    while not le(k):
        k -= 1
    while le(k + 1):
        k += 1
    return k


def _probabilities(n: int) -> tuple[list[int], int]:
    row = tnk_row(n)
    return row, sum(row)


def _normal_pdf(x: float) -> float:
    return math.exp(-x * x / 2) / math.sqrt(2 * math.pi)


def _normal_cdf(x: float) -> float:
    return 0.5 * math.erfc(-x / math.sqrt(2))


def default_grid(step=Fraction(1, 20), bound: int = 4) -> list[Fraction]:
    k = int(bound / step)
    return [i * step for i in range(-k, k + 1)]


def llt_gap(n: int, grid: Sequence | None = None) -> float:
    """``max_x |sigma_n p(n, floor(mu_n + x sigma_n)) - phi(x)|`` over the grid."""
    if n < 2:
        raise ValueError("n must be >= 2")
    grid = default_grid() if grid is None else [as_fraction(x) for x in grid]
    if not grid:
        return 0.0
    st = moment_stats(n, check=False)
    row, total = _probabilities(n)
    sigma = math.sqrt(float(st.sigma2))
    worst = 0.0
    for x in grid:
        if abs(x) > 4:
            raise ValueError("grid must lie within [-4, 4]")
        k = floor_shift(st.mu, st.sigma2, x)
        p = Fraction(row[k], total) if 0 <= k < len(row) else Fraction(0)
        worst = max(worst, abs(sigma * float(p) - _normal_pdf(float(x))))
    return worst


def clt_gap(n: int, grid: Sequence | None = None) -> float:
    """``max_x |sum_{k <= mu_n + x sigma_n} p(n,k) - Phi(x)|`` over the grid."""
    if n < 2:
        raise ValueError("n must be >= 2")
    grid = default_grid() if grid is None else [as_fraction(x) for x in grid]
    if not grid:
        return 0.0
    st = moment_stats(n, check=False)
    row, total = _probabilities(n)
    prefix = [0]
    for a in row:
        prefix.append(prefix[-1] + a)
    worst = 0.0
    for x in grid:
        if abs(x) > 4:
            raise ValueError("grid must lie within [-4, 4]")
        k = floor_shift(st.mu, st.sigma2, x)
        k = min(max(k, -1), len(row) - 1)
        mass = Fraction(prefix[k + 1], total)
        worst = max(worst, abs(float(mass) - _normal_cdf(float(x))))
    return worst


@dataclass
class LimitsReport:
    ladder: list[int]
    llt: list[float]
    clt: list[float]
    stats: list[MomentStats]

    @property
    def llt_decreasing(self) -> bool:
        return all(a > b for a, b in zip(self.llt, self.llt[1:]))


def limits_ladder(ladder: Sequence[int], grid: Sequence | None = None) -> LimitsReport:
    ladder = list(ladder)
    return LimitsReport(
        ladder,
        [llt_gap(n, grid) for n in ladder],
        [clt_gap(n, grid) for n in ladder],
        [moment_stats(n) for n in ladder],
    )

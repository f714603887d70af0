"""Proper Riordan arrays, their A- and Z-sequences, and the Shapiro sum identity."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .kernel import normalize
from .seqgen import TriangleMatrix, tbc_gf, tbc_number, trinomial_expand_oracle
from .series import TruncSeries


class TheoremViolation(AssertionError):
    """Two independently computed sides of an identity disagree."""

    def __init__(self, message: str, lhs=None, rhs=None):
        super().__init__(message)
        self.lhs = lhs
        self.rhs = rhs


class NotRiordanError(ValueError):
    pass


@dataclass(frozen=True)
class RiordanArray:
    """``R(g, f)``: column ``k`` has generating function ``x^k f^k g``."""

    g: TruncSeries
    f: TruncSeries
    depth: int

    def __post_init__(self):
        if self.g[0] != 1:
            raise NotRiordanError("g must have constant term 1")
        if self.f[0] == 0:
            raise NotRiordanError("f must have nonzero constant term")


@dataclass(frozen=True)
class AZPair:
    a_seq: tuple
    z_seq: tuple

    def A(self, order: int) -> TruncSeries:
        return TruncSeries(self.a_seq, order)

    def Z(self, order: int) -> TruncSeries:
        return TruncSeries(self.z_seq, order)


def riordan_matrix(r: RiordanArray) -> TriangleMatrix:
    """Rows ``0..depth`` of ``R(g, f)``."""
    if r.depth > min(r.g.order, r.f.order):
        raise ValueError("depth exceeds series order")
    d = r.depth
    g = r.g.truncate(d)
    f = r.f.truncate(d)
    cols = []
    col = g  # x^k f^k g, k = 0
    for k in range(d + 1):
        cols.append(col)
        col = (col * f).shift(1)
    return TriangleMatrix(tuple(tuple(cols[k][n] for k in range(n + 1)) for n in range(d + 1)))


def ftra_sum(r: RiordanArray, h: TruncSeries, n: int):
    """``sum_k r_{n,k} h_k == [x^n] g(x) h(x f(x))``, both sides computed."""
    if n > r.depth:
        raise ValueError("n exceeds depth")
    if h.order < n:
        raise ValueError("order of h must be at least n")
    m = riordan_matrix(r)
    lhs = 0
    for k in range(n + 1):
        lhs = lhs + m[n, k] * h[k]
    lhs = normalize(lhs)
    xf = r.f.truncate(n).shift(1)
    rhs = normalize((r.g.truncate(n) * h.truncate(n).compose(xf))[n])
    if lhs != rhs:
        raise TheoremViolation(f"Riordan sum identity fails at n={n}", lhs, rhs)
    return lhs


def _trim(seq: list) -> tuple:
    while len(seq) > 1 and seq[-1] == 0:
        seq.pop()
    return tuple(normalize(x) for x in seq)


def extract_az(m: TriangleMatrix) -> AZPair:
    """Solve the A/Z row recurrences exactly from a unit-diagonal triangle.

    ``a_j`` and ``z_j`` come from row ``j`` (unit pivots, no division);
    every other entry reachable inside the depth horizon is then checked.
    """
    d = m.depth
    if d < 1:
        raise ValueError("need depth >= 1")
    for n in range(d + 1):
        if m[n, n] != 1:
            raise NotRiordanError("not a proper Riordan array (diagonal must be 1)")
    a: list = []
    z: list = []
    for j in range(d):
        acc_a = m[j + 1, 1]
        acc_z = m[j + 1, 0]
        for i in range(j):
            acc_a = acc_a - a[i] * m[j, i]
            acc_z = acc_z - z[i] * m[j, i]
        a.append(normalize(acc_a))
        z.append(normalize(acc_z))
    for n in range(d):
        for k in range(n + 1):
            pred = 0
            for j in range(n - k + 1):
                pred = pred + a[j] * m[n, k + j]
            if pred != m[n + 1, k + 1]:
                raise NotRiordanError(f"not a proper Riordan array: A-recurrence fails at ({n + 1},{k + 1})")
        pred = 0
        for j in range(n + 1):
            pred = pred + z[j] * m[n, j]
        if pred != m[n + 1, 0]:
            raise NotRiordanError(f"not a proper Riordan array: Z-recurrence fails at row {n + 1}")
    return AZPair(_trim(a), _trim(z))


def gf_from_az(az: AZPair, order: int) -> RiordanArray:
    """Recover ``(g, f)`` from ``f = A(x f)`` and ``g = 1/(1 - x Z(x f))``."""
    if not az.a_seq or az.a_seq[0] != 1:
        raise ValueError("only a_0 = 1 is supported")
    A = az.A(order)
    f = TruncSeries([1], order)
    for _ in range(order + 1):
        f = A.compose(f.shift(1))
    xf = f.shift(1)
    g = (1 - az.Z(order).compose(xf).shift(1)).inverse()
    return RiordanArray(g, f, order)


def generalized_pascal(a, depth: int) -> RiordanArray:
    """``R(1/(1-ax), 1/(1-ax))``."""
    geo = TruncSeries([normalize(a ** k) for k in range(depth + 1)], depth)
    return RiordanArray(geo, geo, depth)


def tbc_riordan(b, c, depth: int) -> RiordanArray:
    """``R(Tt, Mx)`` -- the Laurent triangle as a Riordan array."""
    from .seqgen import motzkin_gf

    return RiordanArray(tbc_gf(b, c, depth), motzkin_gf(b, c, depth), depth)


def mbc_riordan(b, c, depth: int) -> RiordanArray:
    from .seqgen import motzkin_gf

    m = motzkin_gf(b, c, depth)
    return RiordanArray(m, m, depth)


def quadratic_residual(b, c, f: TruncSeries) -> TruncSeries:
    """``c x^2 f^2 - (1 - b x) f + 1`` through the order of ``f``."""
    n = f.order
    return (f * f).shift(2) * c - TruncSeries([1, -b], n) * f + 1


def binomial_transform(b, c, a, n: int):
    """``sum_k C(n,k) T_k(b,c) a^(n-k) == T_n(a+b, c)``, both sides computed."""
    from .seqgen import tbc_sequence

    t = tbc_sequence(b, c, n)
    lhs = 0
    for k in range(n + 1):
        lhs = lhs + comb(n, k) * t[k] * a ** (n - k)
    lhs = normalize(lhs)
    rhs = tbc_number(a + b, c, n)
    if lhs != rhs:
        raise TheoremViolation(f"binomial transform fails at n={n}", lhs, rhs)
    return lhs


def identity_report(lhs, rhs) -> dict:
    from .seqgen import serialize_value

    return {"lhs": serialize_value(lhs), "rhs": serialize_value(rhs), "equal": lhs == rhs}


__all__ = [
    "AZPair",
    "NotRiordanError",
    "RiordanArray",
    "TheoremViolation",
    "binomial_transform",
    "extract_az",
    "ftra_sum",
    "generalized_pascal",
    "gf_from_az",
    "mbc_riordan",
    "quadratic_residual",
    "riordan_matrix",
    "tbc_riordan",
    "trinomial_expand_oracle",
]

"""Exact real-root counting, isolation and interlacing via Sturm chains.

All verdicts are decided over the rationals.  Internally polynomials are
primitive integer coefficient tuples (lowest degree first) and a rational
point ``p/q`` is evaluated as ``q^d f(p/q)``, so sign tests never build a
Fraction.  Floats appear only in :func:`approx_roots`, for display.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Sequence

from .kernel import UniPoly, as_fraction
from .seqgen import row_poly

IntPoly = tuple[int, ...]


class NotRealRootedError(ValueError):
    def __init__(self, message: str, distinct_real: int, degree: int):
        super().__init__(message)
        self.distinct_real = distinct_real
        self.degree = degree


# ---------------------------------------------------------------------------
# integer polynomial plumbing


def _primitive(a: Sequence[int]) -> IntPoly:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    g = 0
    for v in a:
        g = gcd(g, v)
    if g > 1:
        a = [v // g for v in a]
    return tuple(a)


def _from_uni(f: UniPoly) -> IntPoly:
    den = 1
    for c in f.coeffs:
        den = lcm(den, c.denominator)
    return _primitive(int(c * den) for c in f.coeffs)


def _deriv(a: IntPoly) -> IntPoly:
    return _primitive(k * a[k] for k in range(1, len(a)))


def _prem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Positive multiple of ``a mod b``."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    sign = 1
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        # r <- lb * r - lr * x^shift * b
        r = [lb * v for v in r]
        if lb < 0:
            sign = -sign
        for j, bv in enumerate(b):
            r[shift + j] -= lr * bv
        r.pop()
        while r and r[-1] == 0:
            r.pop()
        if r:
            g = 0
            for v in r:
                g = gcd(g, v)
            if g > 1:
                r = [v // g for v in r]
    return tuple(v * sign for v in r)


def _igcd(a: IntPoly, b: IntPoly) -> IntPoly:
    a, b = _primitive(a), _primitive(b)
    while b:
        a, b = b, _primitive(_prem(a, b))
    return a


def _quot(a: IntPoly, b: IntPoly) -> IntPoly:
    q, r = divmod(UniPoly(a), UniPoly(b))
    return _from_uni(q)


@lru_cache(maxsize=512)
def _chain(a: IntPoly) -> tuple[IntPoly, ...]:
    """Sturm chain ``f, f', -rem, ...`` with positive rescaling."""
    chain = [a, _deriv(a)]
    if not chain[1]:
        return (a,)
    while True:
        r = _prem(chain[-2], chain[-1])
        if not r:
            break
        chain.append(tuple(-v for v in r))
    return tuple(chain)


def _sign_pq(a: IntPoly, p: int, q: int) -> int:
    """Sign of ``a(p/q)`` for ``q > 0``."""
    if not a:
        return 0
    d = len(a) - 1
    acc = a[d]
    qk = 1
    for k in range(d - 1, -1, -1):
        qk *= q
        acc = acc * p + a[k] * qk
    return (acc > 0) - (acc < 0)


def _sign_changes(values: Sequence[int]) -> int:
    signs = [s for s in values if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _var(chain: Sequence[IntPoly], x: Fraction) -> int:
    p, q = x.numerator, x.denominator
    return _sign_changes([_sign_pq(c, p, q) for c in chain])


def _var_inf(chain: Sequence[IntPoly], sign: int) -> int:
    vals = []
    for c in chain:
        s = 1 if c[-1] > 0 else -1
        if sign < 0 and (len(c) - 1) % 2:
            s = -s
        vals.append(s)
    return _sign_changes(vals)


def _count(chain, lo: Fraction, hi: Fraction) -> int:
    return _var(chain, lo) - _var(chain, hi)


def _total(chain) -> int:
    return _var_inf(chain, -1) - _var_inf(chain, 1)


def _cauchy(a: IntPoly) -> Fraction:
    lc = abs(a[-1])
    return 1 + max((Fraction(abs(v), lc) for v in a[:-1]), default=Fraction(0))


# ---------------------------------------------------------------------------
# public API


def sturm_chain(f: UniPoly) -> list[UniPoly]:
    """``f, f', -rem(f, f'), ...``; each member scaled by a positive rational."""
    if f.is_zero():
        raise ValueError("zero polynomial has no Sturm chain")
    return [UniPoly(c) for c in _chain(_from_uni(f))]


def cauchy_bound(f: UniPoly) -> Fraction:
    """Every real root lies strictly inside ``(-B, B)``."""
    return _cauchy(_from_uni(f))


def count_roots(f: UniPoly, lo, hi) -> int:
    """Number of distinct real roots in ``(lo, hi]``."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    lo, hi = as_fraction(lo), as_fraction(hi)
    if lo >= hi:
        raise ValueError("need lo < hi")
    return _count(_chain(_from_uni(f)), lo, hi)


def count_real_roots(f: UniPoly) -> int:
    """Number of distinct real roots."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    return _total(_chain(_from_uni(f)))


def _squarefree(a: IntPoly) -> IntPoly:
    g = _igcd(a, _deriv(a)) if len(a) > 2 else (1,)
    return a if len(g) == 1 else _quot(a, g)


def squarefree_part(f: UniPoly) -> UniPoly:
    return UniPoly(_squarefree(_from_uni(f)))


def _is_real_rooted(a: IntPoly) -> bool:
    if len(a) <= 2:
        return True
    sf = _squarefree(a)
    return _total(_chain(sf)) == len(sf) - 1


def is_real_rooted(f: UniPoly) -> bool:
    """True iff every complex root of ``f`` is real (multiplicity allowed)."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    return _is_real_rooted(_from_uni(f))


@dataclass(frozen=True)
class RootIntervals:
    """Disjoint isolating intervals, largest root first.

    ``(lo, hi)`` with ``lo < hi`` is the half-open interval ``(lo, hi]``;
    ``(r, r)`` means the root is exactly ``r``.
    """

    intervals: tuple[tuple[Fraction, Fraction], ...]

    def __len__(self):
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def __getitem__(self, i):
        return self.intervals[i]

    def max_width(self) -> Fraction:
        return max((hi - lo for lo, hi in self.intervals), default=Fraction(0))

    def contains(self, i: int, x) -> bool:
        lo, hi = self.intervals[i]
        x = as_fraction(x)
        return x == lo if lo == hi else lo < x <= hi


def _isolate(chain, lo: Fraction, hi: Fraction, n: int, width: Fraction, out: list):
    # (lo, hi] holds n roots; emit larger roots first
    if n == 0:
        return
    if n == 1 and hi - lo <= width:
        out.append((lo, hi))
        return
    mid = (lo + hi) / 2
    left = _count(chain, lo, mid)
    _isolate(chain, mid, hi, n - left, width, out)
    _isolate(chain, lo, mid, left, width, out)


def _isolate_int(a: IntPoly, width: Fraction) -> list[tuple[Fraction, Fraction]]:
    if len(a) <= 1:
        return []
    chain = _chain(a)
    total = _total(chain)
    d = len(a) - 1
    if total < d:
        raise NotRealRootedError(f"only {total} distinct real roots for degree {d}", total, d)
    B = _cauchy(a)
    out: list = []
    _isolate(chain, -B, B, total, width, out)
    return out


def isolate_roots(f: UniPoly, width=Fraction(1, 2**10)) -> RootIntervals:
    """Isolate the roots of a real-rooted squarefree ``f``, largest first.

    Raises :class:`NotRealRootedError` (carrying the distinct-root count as
    certificate) when fewer than ``deg f`` distinct real roots exist.
    """
    if f.is_zero():
        raise ValueError("zero polynomial")
    return RootIntervals(tuple(_isolate_int(_from_uni(f), as_fraction(width))))


def _refine(a: IntPoly, chain, iv: tuple[Fraction, Fraction]) -> tuple[Fraction, Fraction]:
    lo, hi = iv
    if lo == hi:
        return iv
    mid = (lo + hi) / 2
    if _sign_pq(a, mid.numerator, mid.denominator) == 0:
        return (mid, mid)
    if _count(chain, lo, mid) == 1:
        return (lo, mid)
    return (mid, hi)


def _sign_at_roots(f: IntPoly, g: IntPoly, width: Fraction) -> list[int]:
    """Sign of ``g`` at each root of squarefree ``f`` (largest first).

    ``f`` and ``g`` must be coprime: each isolating interval is refined until
    ``g`` has no root in it, then ``g`` is evaluated at an interior point.
    """
    fchain = _chain(f)
    gchain = _chain(g) if len(g) > 1 else None
    signs = []
    for iv in _isolate_int(f, width):
        while True:
            lo, hi = iv
            if lo == hi:
                s = _sign_pq(g, lo.numerator, lo.denominator)
                break
            if gchain is None or (_count(gchain, lo, hi) == 0):
                mid = (lo + hi) / 2
                s = _sign_pq(g, mid.numerator, mid.denominator)
                break
            iv = _refine(f, fchain, iv)
        signs.append(s)
    return signs


def _interlaces(g: IntPoly, f: IntPoly) -> bool:
    if not (_is_real_rooted(f) and _is_real_rooted(g)):
        return False
    if len(_squarefree(f)) != len(f) or len(_igcd(f, g)) > 1:
        return False
    lead = 1 if g[-1] > 0 else -1
    signs = _sign_at_roots(f, g, Fraction(1, 2**4))
    return all(s == lead * (-1) ** i for i, s in enumerate(signs))


def strictly_interlaces(g: UniPoly, f: UniPoly) -> bool:
    """Decide exactly whether ``g`` strictly interlaces ``f``.

    Required root order: ``r1(f) > r1(g) > r2(f) > r2(g) > ...`` with
    ``deg g <= deg f <= deg g + 1``.  With ``f`` squarefree and real-rooted
    this is the same as ``sign g(r_i(f)) = (-1)^(i-1) sign lc(g)`` for every
    root of ``f``, which is what gets checked.  A constant ``a`` strictly
    interlaces ``p x + q`` exactly when ``a > 0``, ``p, q >= 0`` and
    ``p + q > 0``.
    """
    if g.is_zero() or f.is_zero():
        raise ValueError("zero polynomial")
    dg, df = g.degree, f.degree
    if not (dg <= df <= dg + 1):
        raise ValueError("degree mismatch")
    if dg == 0:
        a = g[0]
        return a > 0 and f[1] >= 0 and f[0] >= 0 and f[1] + f[0] > 0
    return _interlaces(_from_uni(g), _from_uni(f))


def strictly_interlaces_by_merge(g: UniPoly, f: UniPoly) -> bool:
    """Second route: refine both isolations until disjoint, then read off the order."""
    dg, df = g.degree, f.degree
    if not (dg <= df <= dg + 1):
        raise ValueError("degree mismatch")
    if dg == 0:
        return strictly_interlaces(g, f)
    fa, ga = _from_uni(f), _from_uni(g)
    if not (_is_real_rooted(fa) and _is_real_rooted(ga)):
        return False
    if len(_squarefree(fa)) != len(fa) or len(_squarefree(ga)) != len(ga) or len(_igcd(fa, ga)) > 1:
        return False
    fc, gc = _chain(fa), _chain(ga)
    fi, gi = _isolate_int(fa, Fraction(1)), _isolate_int(ga, Fraction(1))
    while True:
        clash = False
        for i in range(len(fi)):
            for j in range(len(gi)):
                if _meets(fi[i], gi[j]):
                    clash = True
                    fi[i] = _refine(fa, fc, fi[i])
                    gi[j] = _refine(ga, gc, gi[j])
        if not clash:
            break
    merged = sorted([(iv[1], "f") for iv in fi] + [(iv[1], "g") for iv in gi], reverse=True)
    pattern = "".join(tag for _x, tag in merged)
    return pattern == "".join("fg"[i % 2] for i in range(df + dg))


def _meets(a: tuple[Fraction, Fraction], b: tuple[Fraction, Fraction]) -> bool:
    (l1, h1), (l2, h2) = a, b
    if l1 == h1 and l2 == h2:
        return l1 == l2
    if l1 == h1:
        return l2 < l1 <= h2
    if l2 == h2:
        return l1 < l2 <= h1
    return max(l1, l2) < min(h1, h2)


def sign_alternation(n: int) -> bool:
    """At every root of ``G_n``, ``G_{n-1}`` and ``G_{n+1}`` have opposite signs."""
    gn = _from_uni(row_poly(n))
    if len(gn) <= 1:
        return True
    gm, gp = _from_uni(row_poly(n - 1)), _from_uni(row_poly(n + 1))
    sm = _sign_at_roots(gn, gm, Fraction(1, 2**4))
    sp = _sign_at_roots(gn, gp, Fraction(1, 2**4))
    return all(a * b < 0 for a, b in zip(sm, sp))


def witness_points(f: UniPoly, width=Fraction(1, 2**20)) -> list[Fraction]:
    """One rational point per isolating interval."""
    return [lo if lo == hi else (lo + hi) / 2 for lo, hi in isolate_roots(f, width)]


def approx_roots(f: UniPoly, width=Fraction(1, 2**30)) -> list[float]:
    """Floating midpoints of the isolating intervals (display only)."""
    return [float((lo + hi) / 2) for lo, hi in isolate_roots(f, width)]


# ---------------------------------------------------------------------------
# the interlacing suite for the row polynomials G_n


@dataclass
class InterlaceEntry:
    n: int
    real_rooted: bool
    consecutive: bool | None
    fisk: bool | None
    max_width: str | None = None

    @property
    def ok(self) -> bool:
        return self.real_rooted and self.consecutive is not False and self.fisk is not False


@dataclass
class FiskReport:
    max_n: int
    entries: list[InterlaceEntry] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e.ok for e in self.entries)

    @property
    def first_failure(self) -> InterlaceEntry | None:
        return next((e for e in self.entries if not e.ok), None)


def check_index(n: int, width=Fraction(1, 2**10)) -> InterlaceEntry:
    """Verdicts for ``G_n``: real-rooted, ``G_n << G_{n+1}``, ``G_{n-1} << G_{n+1}``."""
    gn, gp = row_poly(n), row_poly(n + 1)
    rr = is_real_rooted(gn)
    cons = strictly_interlaces(gn, gp)
    fisk = strictly_interlaces(row_poly(n - 1), gp) if n >= 1 else None
    mw = str(isolate_roots(gn, width).max_width()) if rr and gn.degree > 0 else None
    return InterlaceEntry(n, rr, cons, fisk, mw)


def verify_fisk(max_n: int, jobs: int = 1) -> FiskReport:
    """Run :func:`check_index` for every ``0 <= n <= max_n``."""
    if max_n < 2:
        raise ValueError("max_n must be >= 2")
    from .parallel import pmap

    return FiskReport(max_n, pmap(check_index, range(max_n + 1), jobs))

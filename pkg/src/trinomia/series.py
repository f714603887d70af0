"""Truncated formal power series with exact coefficients.

A :class:`TruncSeries` of order ``N`` stores coefficients ``0..N``; every
one of them is exact.  Binary operations truncate to the smaller order.
Coefficients may be ints, Fractions or :class:`~trinomia.kernel.BiPoly`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .kernel import BiPoly, exact_div, normalize


class TruncSeries:
    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence, order: int):
        if order < 0:
            raise ValueError("order must be >= 0")
        cs = [normalize(c) for c in list(coeffs)[: order + 1]]
        cs.extend([0] * (order + 1 - len(cs)))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def from_function(cls, fn: Callable[[int], object], order: int) -> "TruncSeries":
        return cls([fn(k) for k in range(order + 1)], order)

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls([1], order)

    @classmethod
    def x(cls, order: int) -> "TruncSeries":
        return cls([0, 1], order)

    def __getitem__(self, k: int):
        if k > self.order:
            raise IndexError(f"coefficient {k} beyond truncation order {self.order}")
        return self.coeffs[k] if k >= 0 else 0

    def __len__(self):
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise ValueError("cannot raise truncation order")
        return TruncSeries(self.coeffs, order)

    def _lift(self, other) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            return other
        return TruncSeries([other], self.order)

    def __add__(self, other):
        o = self._lift(other)
        n = min(self.order, o.order)
        return TruncSeries([self.coeffs[k] + o.coeffs[k] for k in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return TruncSeries([c * other for c in self.coeffs], self.order)
        n = min(self.order, other.order)
        out = []
        for k in range(n + 1):
            acc = 0
            for i in range(k + 1):
                a = self.coeffs[i]
                if a == 0:
                    continue
                bcoef = other.coeffs[k - i]
                if bcoef == 0:
                    continue
                acc = acc + a * bcoef
            out.append(acc)
        return TruncSeries(out, n)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = TruncSeries.one(self.order)
        for _ in range(e):
            out = out * self
        return out

    def shift(self, k: int = 1) -> "TruncSeries":
        """Multiply by ``x^k`` keeping the same order."""
        return TruncSeries([0] * k + list(self.coeffs), self.order)

    def inverse(self) -> "TruncSeries":
        """Multiplicative inverse; needs an invertible constant term."""
        c0 = self.coeffs[0]
        out = [exact_div(1, c0)]
        for n in range(1, self.order + 1):
            acc = 0
            for k in range(1, n + 1):
                if self.coeffs[k] != 0:
                    acc = acc + self.coeffs[k] * out[n - k]
            out.append(exact_div(-acc, c0))
        return TruncSeries(out, self.order)

    def compose(self, inner: "TruncSeries") -> "TruncSeries":
        """``self(inner(x))``; ``inner`` must have zero constant term."""
        if inner.coeffs[0] != 0:
            raise ValueError("inner series must have zero constant term")
        n = min(self.order, inner.order)
        acc = TruncSeries([self.coeffs[n]], n)
        for k in range(n - 1, -1, -1):
            acc = acc * inner.truncate(n) + self.coeffs[k]
        return acc

    def exact_div(self, d) -> "TruncSeries":
        return TruncSeries([exact_div(c, d) for c in self.coeffs], self.order)

    def __eq__(self, other):
        if isinstance(other, TruncSeries):
            n = min(self.order, other.order)
            return all(self.coeffs[k] == other.coeffs[k] for k in range(n + 1))
        return NotImplemented

    def __repr__(self):
        body = ", ".join(str(c) for c in self.coeffs)
        return f"TruncSeries([{body}], order={self.order})"


def series_power(p: TruncSeries, alpha: Fraction, order: int) -> TruncSeries:
    """``p(x)**alpha`` for ``p(0) = 1`` via the ODE ``p s' = alpha p' s``.

    Coefficient form: ``n s_n = sum_{k=1..n} (alpha*k - (n-k)) p_k s_{n-k}``.
    Scaled by ``den(alpha)`` so only the final division leaves the ring.
    """
    if p.coeffs[0] != 1:
        raise ValueError("constant term must be 1")
    if order > p.order:
        raise ValueError("requested order exceeds the order of p")
    alpha = Fraction(alpha)
    num, den = alpha.numerator, alpha.denominator
    s = [1]
    for n in range(1, order + 1):
        acc = 0
        for k in range(1, n + 1):
            pk = p.coeffs[k]
            if pk == 0:
                continue
            w = num * k - den * (n - k)
            if w:
                acc = acc + w * pk * s[n - k]
        s.append(exact_div(acc, den * n))
    return TruncSeries(s, order)


def series_inv_sqrt(p: TruncSeries, order: int) -> TruncSeries:
    """``1/sqrt(p)`` through ``x^order``; ``p`` must have constant term 1."""
    return series_power(p, Fraction(-1, 2), order)


def series_sqrt(p: TruncSeries, order: int) -> TruncSeries:
    return series_power(p, Fraction(1, 2), order)


def trinomial_kernel(b, c, order: int) -> TruncSeries:
    """``1 - 2 b x + (b^2 - 4c) x^2`` as a series of the given order."""
    return TruncSeries([1, -2 * b, b * b - 4 * c], order)


def bipoly_series(coeffs, order: int) -> TruncSeries:
    return TruncSeries([BiPoly.coerce(c) if not isinstance(c, BiPoly) else c for c in coeffs], order)

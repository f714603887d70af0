"""Central trinomial numbers, their triangles, and independent routes to them.

Each generator accepts ``b`` and ``c`` as ints, Fractions, or the symbolic
:class:`~trinomia.kernel.BiPoly` generators, so the same code yields
``T_n(3, 2) = 63`` or ``T_3(b, c) = b^3 + 6bc``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Sequence

from .kernel import BiPoly, UniPoly, exact_div, is_symbolic, normalize, symbols
from .series import TruncSeries, series_inv_sqrt, series_sqrt, trinomial_kernel


@dataclass(frozen=True)
class TriangleMatrix:
    """Lower-triangular matrix; ``rows[n]`` holds columns ``0..n``."""

    rows: tuple[tuple, ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        for n, r in enumerate(rows):
            if len(r) != n + 1:
                raise ValueError(f"row {n} has length {len(r)}, expected {n + 1}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_function(cls, entry: Callable[[int, int], object], depth: int) -> "TriangleMatrix":
        return cls(tuple(tuple(entry(n, k) for k in range(n + 1)) for n in range(depth + 1)))

    @property
    def depth(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, nk: tuple[int, int]):
        n, k = nk
        if k < 0 or k > n or n > self.depth:
            if n > self.depth:
                raise IndexError(f"row {n} beyond depth {self.depth}")
            return 0
        return self.rows[n][k]

    def square(self, size: int | None = None) -> list[list]:
        size = self.depth + 1 if size is None else size
        return [[self[n, k] if k <= n else 0 for k in range(size)] for n in range(size)]

    def column(self, k: int) -> list:
        return [self[n, k] for n in range(k, self.depth + 1)]

    def truncate(self, depth: int) -> "TriangleMatrix":
        return TriangleMatrix(self.rows[: depth + 1])

    def map(self, fn: Callable) -> "TriangleMatrix":
        return TriangleMatrix(tuple(tuple(fn(x) for x in r) for r in self.rows))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for r in self.rows:
            w.writerow([str(x) for x in r])
        return buf.getvalue()

    def to_json(self) -> list:
        return [[_entry_json(x) for x in r] for r in self.rows]


def _entry_json(x):
    if isinstance(x, BiPoly):
        return x.to_json()
    return str(normalize(x))


# ---------------------------------------------------------------------------
# Closed forms


def tnk_coeff(n: int, k: int) -> int:
    """``n! / (k! k! (n-2k)!)``, zero outside ``0 <= 2k <= n``."""
    if k < 0 or 2 * k > n:
        return 0
    return comb(n, 2 * k) * comb(2 * k, k)


def tnk_row(n: int) -> list[int]:
    """Row ``n`` of the T(n,k) triangle by the ratio recurrence."""
    row = [1]
    for k in range(n // 2):
        row.append(row[-1] * (n - 2 * k) * (n - 2 * k - 1) // ((k + 1) * (k + 1)))
    return row


def row_poly(n: int) -> UniPoly:
    """``G_n(x) = sum_k T(n,k) x^k``."""
    return UniPoly(tnk_row(n))


def tu_matrix(depth: int) -> TriangleMatrix:
    return TriangleMatrix.from_function(tnk_coeff, depth)


def tbc_number(b, c, n: int):
    """``T_n(b, c)`` by the three-term recurrence.

    ``(n+1) T_{n+1} = (2n+1) b T_n - n (b^2 - 4c) T_{n-1}``.  In symbolic mode
    the division by ``n+1`` must be exact; otherwise ArithmeticError.
    """
    return tbc_sequence(b, c, n)[n]


def tbc_sequence(b, c, n: int) -> list:
    """``[T_0(b,c), ..., T_n(b,c)]`` by the recurrence."""
    if n < 0:
        raise ValueError("n must be >= 0")
    disc = b * b - 4 * c
    seq = [normalize(b * 0 + 1), normalize(b)]
    for m in range(1, n):
        num = (2 * m + 1) * b * seq[m] - m * disc * seq[m - 1]
        seq.append(exact_div(num, m + 1))
    return seq[: n + 1]


def tbc_number_direct(b, c, n: int):
    """``T_n(b,c) = sum_k T(n,k) b^(n-2k) c^k``."""
    total = 0
    for k in range(n // 2 + 1):
        total = total + tnk_coeff(n, k) * b ** (n - 2 * k) * c ** k
    return normalize(total)


def trinomial_expand_oracle(b, c, n: int):
    """Coefficient of ``x^n`` in ``(x^2 + b x + c)^n`` by repeated convolution."""
    return trinomial_power(b, c, n)[n]


def trinomial_power(b, c, n: int) -> list:
    """Coefficients of ``(x^2 + b x + c)^n``, lowest first."""
    base = [c, b, 1]
    poly = [1]
    for _ in range(n):
        out = [0] * (len(poly) + 2)
        for i, p in enumerate(poly):
            if p == 0:
                continue
            for j, q in enumerate(base):
                out[i + j] = out[i + j] + p * q
        poly = out
    return [normalize(x) for x in poly]


def tbc_series_extract(b, c, n: int):
    """``T_n(b,c)`` as ``[x^n] 1/sqrt(1 - 2bx + (b^2-4c) x^2)``."""
    return series_inv_sqrt(trinomial_kernel(b, c, n), n)[n]


def tbc_gf(b, c, order: int) -> TruncSeries:
    return series_inv_sqrt(trinomial_kernel(b, c, order), order)


def laurent_entry(n: int, k: int, b, c):
    """Coefficient of ``x^k`` in ``(x + b + c/x)^n``; zero when ``|k| > n``."""
    if abs(k) > n:
        return 0
    if k < 0:
        return normalize(c ** (-k) * laurent_entry(n, -k, b, c))
    total = 0
    for j in range((n - k) // 2 + 1):
        coef = factorial(n) // (factorial(j) * factorial(j + k) * factorial(n - k - 2 * j))
        total = total + coef * b ** (n - k - 2 * j) * c ** j
    return normalize(total)


def tbc_triangle(b, c, depth: int) -> TriangleMatrix:
    """``[T_{n,k}(b,c)]`` for ``0 <= k <= n <= depth``."""
    return TriangleMatrix.from_function(lambda n, k: laurent_entry(n, k, b, c), depth)


def motzkin_number(b, c, n: int):
    """``M_n(b,c) = sum_k C(n,2k) Catalan(k) b^(n-2k) c^k``."""
    total = 0
    for k in range(n // 2 + 1):
        coef = comb(n, 2 * k) * comb(2 * k, k) // (k + 1)
        total = total + coef * b ** (n - 2 * k) * c ** k
    return normalize(total)


def motzkin_sequence(b, c, n: int) -> list:
    return [motzkin_number(b, c, m) for m in range(n + 1)]


def motzkin_gf(b, c, order: int) -> TruncSeries:
    """``(1 - bx - sqrt(1 - 2bx + (b^2-4c) x^2)) / (2 c x^2)`` through ``x^order``."""
    root = series_sqrt(trinomial_kernel(b, c, order + 2), order + 2)
    num = TruncSeries([1, -b], order + 2) - root
    if num[0] != 0 or num[1] != 0:
        raise ArithmeticError("numerator must vanish to second order")
    return TruncSeries([exact_div(num[k + 2], 2 * c) for k in range(order + 1)], order)


def motzkin_triangle(b, c, depth: int) -> TriangleMatrix:
    """Recursive matrix with constant weights ``(b; c)``."""
    from .aigner import RecursiveSpec, recursive_matrix

    return recursive_matrix(RecursiveSpec.constant(b, c), depth)


def pascal_triangle(a, depth: int) -> TriangleMatrix:
    """``[C(n,k) a^(n-k)]``."""
    return TriangleMatrix.from_function(lambda n, k: normalize(comb(n, k) * a ** (n - k)), depth)


@lru_cache(maxsize=None)
def central_trinomials(n: int) -> tuple[int, ...]:
    """``T_0..T_n`` for ``b = c = 1`` via ``(m+1) T_{m+1} = (2m+1) T_m + 3m T_{m-1}``."""
    seq = [1, 1]
    for m in range(1, n):
        seq.append(((2 * m + 1) * seq[m] + 3 * m * seq[m - 1]) // (m + 1))
    return tuple(seq[: n + 1])


def serialize_value(x):
    """JSON-ready value: BiPoly terms or an exact decimal string."""
    return _entry_json(x)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2)


def symbolic_pair() -> tuple[BiPoly, BiPoly]:
    return symbols()


__all__ = [
    "TriangleMatrix",
    "tnk_coeff",
    "tnk_row",
    "row_poly",
    "tu_matrix",
    "tbc_number",
    "tbc_sequence",
    "tbc_number_direct",
    "trinomial_expand_oracle",
    "trinomial_power",
    "tbc_series_extract",
    "tbc_gf",
    "laurent_entry",
    "tbc_triangle",
    "motzkin_number",
    "motzkin_sequence",
    "motzkin_gf",
    "motzkin_triangle",
    "pascal_triangle",
    "central_trinomials",
    "is_symbolic",
]

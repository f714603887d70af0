"""Aigner's recursive matrices, Catalan-like numbers and Hankel determinants."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Sequence

from .kernel import normalize
from .linalg import det, diag, is_zero_matrix, matmul, transpose
from .riordan import TheoremViolation
from .seqgen import TriangleMatrix


@dataclass(frozen=True)
class RecursiveSpec:
    """Eventually-constant weights ``b_0, b_1, ...`` and ``c_1, c_2, ...``.

    ``b_k = b_prefix[k]`` while defined, else ``b_tail``; likewise ``c``,
    whose prefix starts at index 1.
    """

    b_prefix: tuple
    b_tail: object
    c_prefix: tuple
    c_tail: object

    @classmethod
    def constant(cls, b, c) -> "RecursiveSpec":
        return cls((), b, (), c)

    @classmethod
    def tbc(cls, b, c) -> "RecursiveSpec":
        """Weights ``b = (b, b, ...)``, ``c = (2c, c, c, ...)``."""
        return cls((), b, (2 * c,), c)

    @classmethod
    def mbc(cls, b, c) -> "RecursiveSpec":
        return cls.constant(b, c)

    def b_at(self, k: int):
        return self.b_prefix[k] if k < len(self.b_prefix) else self.b_tail

    def c_at(self, k: int):
        if k < 1:
            raise IndexError("c is indexed from 1")
        return self.c_prefix[k - 1] if k - 1 < len(self.c_prefix) else self.c_tail


def recursive_matrix(spec: RecursiveSpec, depth: int) -> TriangleMatrix:
    """``r_{n+1,k} = r_{n,k-1} + b_k r_{n,k} + c_{k+1} r_{n,k+1}``, ``r_{0,0} = 1``."""
    return _recursive_matrix(spec, depth)


@lru_cache(maxsize=64)
def _recursive_matrix(spec: RecursiveSpec, depth: int) -> TriangleMatrix:
    rows = [(normalize(spec.b_tail * 0 + 1),)]
    for n in range(depth):
        prev = rows[-1]

        def r(k):
            return prev[k] if 0 <= k <= n else 0

        new = []
        for k in range(n + 2):
            v = r(k - 1)
            if k <= n:
                v = v + spec.b_at(k) * r(k)
            if k + 1 <= n:
                v = v + spec.c_at(k + 1) * r(k + 1)
            new.append(normalize(v))
        rows.append(tuple(new))
    return TriangleMatrix(tuple(rows))


def delta_weights(spec: RecursiveSpec, n: int) -> list:
    """``delta_0 = 1``, ``delta_k = c_1 c_2 ... c_k``."""
    out = [normalize(spec.b_tail * 0 + 1)]
    for k in range(1, n + 1):
        out.append(normalize(out[-1] * spec.c_at(k)))
    return out


def catalan_like(spec: RecursiveSpec, n: int):
    return recursive_matrix(spec, n)[n, 0]


def catalan_like_sequence(spec: RecursiveSpec, n: int) -> list:
    return recursive_matrix(spec, n).column(0)


def verify_fundamental(spec: RecursiveSpec, m: int, n: int, matrix_form: bool = True):
    """``sum_k r_{m,k} r_{n,k} delta_k == r_{m+n,0}``; optionally ``H = R D R^t``."""
    R = recursive_matrix(spec, m + n)
    delta = delta_weights(spec, max(m, n))
    lhs = 0
    for k in range(min(m, n) + 1):
        lhs = lhs + R[m, k] * R[n, k] * delta[k]
    lhs = normalize(lhs)
    rhs = R[m + n, 0]
    if lhs != rhs:
        raise TheoremViolation(f"fundamental identity fails at (m, n) = ({m}, {n})", lhs, rhs)
    if matrix_form:
        ok = _decomposition_holds(spec, max(m, n) + 1)
        if not ok:
            raise TheoremViolation(f"H != R D R^t on the {max(m, n) + 1}-truncation")
    return lhs


def hankel_residual(spec: RecursiveSpec, size: int) -> list[list]:
    """``H - R D R^t`` on the leading ``size x size`` block."""
    R = recursive_matrix(spec, 2 * size - 2)
    H = [[R[i + j, 0] for j in range(size)] for i in range(size)]
    Rs = R.square(size)
    RDRt = matmul(matmul(Rs, diag(delta_weights(spec, size - 1))), transpose(Rs))
    return [[normalize(H[i][j] - RDRt[i][j]) for j in range(size)] for i in range(size)]


@lru_cache(maxsize=256)
def _decomposition_holds(spec: RecursiveSpec, size: int) -> bool:
    return is_zero_matrix(hankel_residual(spec, size))


def hankel_matrix(seq: Sequence, n: int, shift: int = 0) -> list[list]:
    return [[seq[i + j + shift] for j in range(n + 1)] for i in range(n + 1)]


def hankel_det(seq: Sequence, n: int, shift: int = 0):
    """``det [seq_{i+j+shift}]_{0<=i,j<=n}`` by Bareiss elimination."""
    if len(seq) < 2 * n + 1 + shift:
        raise ValueError(f"need at least {2 * n + 1 + shift} terms")
    return normalize(det(hankel_matrix(seq, n, shift)))


def hankel_transform(seq: Sequence, N: int, shift: int = 0) -> list:
    return [hankel_det(seq, n, shift) for n in range(N + 1)]


def binomial_transform_seq(seq: Sequence, N: int) -> list:
    if len(seq) < N + 1:
        raise ValueError(f"need at least {N + 1} terms")
    out = []
    for n in range(N + 1):
        acc = 0
        for k in range(n + 1):
            acc = acc + comb(n, k) * seq[k]
        out.append(normalize(acc))
    return out


def tbc_hankel_closed_form(c, n: int):
    """``2^n c^(n(n+1)/2)``."""
    return normalize(2 ** n * c ** (n * (n + 1) // 2))

"""Exact matrix helpers: fraction-free determinants, products, minors.

Matrices are plain lists of row lists.  Entries may be ints, Fractions or
BiPolys; nothing here ever touches floating point.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .kernel import exact_div

Matrix = list[list]


def det(m: Sequence[Sequence]) -> object:
    """Determinant by Bareiss fraction-free elimination."""
    n = len(m)
    if n == 0:
        return 1
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                num = piv * row_i[j] - aik * row_k[j]
                row_i[j] = num if prev == 1 else exact_div(num, prev)
            row_i[k] = 0
        prev = piv
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    if not a:
        return []
    inner = len(b)
    if any(len(row) != inner for row in a):
        raise ValueError("shape mismatch in matrix product")
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        new = []
        for j in range(cols):
            acc = 0
            for k in range(inner):
                x = row[k]
                if x == 0:
                    continue
                y = b[k][j]
                if y == 0:
                    continue
                acc = acc + x * y
            new.append(acc)
        out.append(new)
    return out


def transpose(a: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*a)]


def diag(values: Sequence) -> Matrix:
    n = len(values)
    return [[values[i] if i == j else 0 for j in range(n)] for i in range(n)]


def submatrix(a: Sequence[Sequence], rows: Sequence[int], cols: Sequence[int]) -> Matrix:
    return [[a[i][j] for j in cols] for i in rows]


def minor(a: Sequence[Sequence], rows: Sequence[int], cols: Sequence[int]):
    return det(submatrix(a, rows, cols))


def minor2(a: Sequence[Sequence], i0: int, i1: int, j0: int, j1: int):
    return a[i0][j0] * a[i1][j1] - a[i0][j1] * a[i1][j0]


def index_pairs(size: int) -> Iterator[tuple[int, int]]:
    return combinations(range(size), 2)


def all_index_sets(n_rows: int, n_cols: int, order: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    for rows in combinations(range(n_rows), order):
        for cols in combinations(range(n_cols), order):
            yield rows, cols


def leading_block(a: Sequence[Sequence], size: int) -> Matrix:
    return [list(row[:size]) for row in a[:size]]


def is_zero_matrix(a: Iterable[Iterable]) -> bool:
    return all(x == 0 for row in a for x in row)

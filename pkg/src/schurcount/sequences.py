"""Catalan and Schroeder numbers, their two triangular arrays, and Fibonacci.

The triangles are stored by rows ``k = 1, 2, ...``; row ``k`` holds the
columns ``j = 0 .. k-1``.  Entry ``(j, k)`` is addressed as ``tri[k][j]``.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import List


class TriangularArray:
    """Rows of a triangle; ``rows[k-1]`` is row ``k`` with ``k`` entries."""

    def __init__(self, rows: List[List[int]]):
        self.rows = [tuple(r) for r in rows]

    def __len__(self):
        return len(self.rows)

    def row(self, k: int) -> tuple:
        if k < 1:
            raise IndexError("rows are numbered from 1")
        return self.rows[k - 1]

    def __getitem__(self, k: int) -> tuple:
        return self.row(k)

    def entry(self, j: int, k: int) -> int:
        return self.row(k)[j]

    def diagonal(self) -> list[int]:
        """Entries ``(k-1, k)`` for each row ``k``."""
        return [r[-1] for r in self.rows]

    def __eq__(self, other):
        if isinstance(other, TriangularArray):
            return self.rows == other.rows
        return NotImplemented

    def __repr__(self):
        return f"TriangularArray({[list(r) for r in self.rows]})"


def catalan(i: int) -> int:
    if i < 0:
        raise ValueError("negative index")
    return comb(2 * i, i) // (i + 1)


@lru_cache(maxsize=None)
def _catalan_row(k: int) -> tuple:
    if k == 1:
        return (1,)
    prev = _catalan_row(k - 1)
    row = [1]
    for j in range(1, k):
        if j < k - 1:
            # c_{jk} = c_{(j-1)k} + c_{j(k-1)}
            row.append(row[j - 1] + prev[j])
        else:
            # last cell: c_{(k-1)k} = c_{(k-2)k} + c_{(k-2)(k-1)}
            row.append(row[j - 1] + prev[j - 1])
    return tuple(row)


def catalan_triangle(rows: int) -> TriangularArray:
    if rows < 1:
        raise ValueError("need at least one row")
    return TriangularArray([list(_catalan_row(k)) for k in range(1, rows + 1)])


@lru_cache(maxsize=None)
def _super_catalan_row(k: int) -> tuple:
    if k == 1:
        return (1,)
    prev = _super_catalan_row(k - 1)
    row = [1]
    for j in range(1, k):
        if j < k - 1:
            # s_{jk} = s_{(j-1)k} + s_{j(k-1)} + s_{(j-1)(k-1)}
            row.append(row[j - 1] + prev[j] + prev[j - 1])
        else:
            # s_{(k-1)k} = s_{(k-2)k} + 2 s_{(k-2)(k-1)}
            row.append(row[j - 1] + 2 * prev[j - 1])
    return tuple(row)


def super_catalan_triangle(rows: int) -> TriangularArray:
    if rows < 1:
        raise ValueError("need at least one row")
    return TriangularArray([list(_super_catalan_row(k)) for k in range(1, rows + 1)])


def schroder(i: int) -> int:
    """Large Schroeder number: 1 for i = 0, else twice the super-Catalan
    diagonal entry ``s_{(i-1)i}``."""
    if i < 0:
        raise ValueError("negative index")
    if i == 0:
        return 1
    return 2 * _super_catalan_row(i)[i - 1]


def schroder_binomial(i: int) -> int:
    """Closed form ``sum_j C(2j,j) C(i+j,2j) / (j+1)``, kept as an independent check."""
    return sum(catalan(j) * comb(i + j, 2 * j) for j in range(i + 1))


def fibonacci(n: int) -> int:
    if n < 0:
        raise ValueError("negative index")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a

"""Smith normal form over the integers, with the unimodular transforms.

``smith_normal_form(W)`` returns matrices with ``U @ W @ V == S`` exactly,
``|det U| = |det V| = 1``, ``S`` diagonal with nonnegative entries, and each
diagonal entry dividing the next.  Everything is done with Python integers;
the pivot strategy (smallest absolute value first) is deterministic, so
repeated runs produce identical transforms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

__all__ = ["SnfDecomposition", "smith_normal_form", "identity_matrix", "mat_mul", "mat_det"]

Matrix = tuple[tuple[int, ...], ...]


def identity_matrix(k: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(k)] for i in range(k)]


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[list[int]]:
    cols = len(b[0])
    inner = len(b)
    return [
        [sum(row[k] * b[k][j] for k in range(inner)) for j in range(cols)]
        for row in a
    ]


def mat_det(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant needs a square matrix")
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _freeze(m: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(row) for row in m)


@dataclass(frozen=True)
class SnfDecomposition:
    U: Matrix
    S: Matrix
    V: Matrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.S[k][k] for k in range(min(len(self.S), len(self.S[0]))))

    def verify(self, original: Sequence[Sequence[int]]) -> bool:
        """Exact postcondition check: product identity, unimodularity,
        diagonal shape, and the divisibility chain."""
        if _freeze(mat_mul(mat_mul(self.U, original), self.V)) != self.S:
            return False
        if abs(mat_det(self.U)) != 1 or abs(mat_det(self.V)) != 1:
            return False
        for i, row in enumerate(self.S):
            for j, v in enumerate(row):
                if i != j and v != 0:
                    return False
        diag = self.diagonal
        if any(v < 0 for v in diag):
            return False
        for a, b in zip(diag, diag[1:]):
            if a == 0 and b != 0:
                return False
            if a != 0 and b % a != 0:
                return False
        return True


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> SnfDecomposition:
    rows = len(matrix)
    if rows == 0:
        raise ValueError("matrix must be nonempty")
    cols = len(matrix[0])
    if any(len(row) != cols for row in matrix):
        raise ValueError("matrix rows must have equal length")
    a = [[int(v) for v in row] for row in matrix]
    u = identity_matrix(rows)
    v = identity_matrix(cols)

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def col_swap(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def row_sub(i, j, q):
        # row_i -= q * row_j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_sub(i, j, q):
        # col_i -= q * col_j
        for row in a:
            row[i] -= q * row[j]
        for row in v:
            row[i] -= q * row[j]

    def row_negate(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    k = 0
    limit = min(rows, cols)
    while k < limit:
        # Deterministic pivot: smallest nonzero absolute value, first found.
        pivot = None
        best = None
        for i in range(k, rows):
            for j in range(k, cols):
                val = abs(a[i][j])
                if val and (best is None or val < best):
                    best = val
                    pivot = (i, j)
        if pivot is None:
            break
        if pivot[0] != k:
            row_swap(k, pivot[0])
        if pivot[1] != k:
            col_swap(k, pivot[1])

        while True:
            if a[k][k] < 0:
                row_negate(k)
            p = a[k][k]
            for i in range(k + 1, rows):
                if a[i][k]:
                    row_sub(i, k, a[i][k] // p)
            smaller = next((i for i in range(k + 1, rows) if a[i][k]), None)
            if smaller is not None:
                row_swap(k, smaller)  # the remainder is a smaller pivot
                continue
            for j in range(k + 1, cols):
                if a[k][j]:
                    col_sub(j, k, a[k][j] // p)
            smaller = next((j for j in range(k + 1, cols) if a[k][j]), None)
            if smaller is not None:
                col_swap(k, smaller)
                continue
            break

        # Enforce the divisibility chain: the pivot must divide every entry
        # of the remaining submatrix before we move on.
        p = a[k][k]
        offender = None
        for i in range(k + 1, rows):
            if any(a[i][j] % p for j in range(k + 1, cols)):
                offender = i
                break
        if offender is not None:
            row_sub(k, offender, -1)  # fold the offending row in and redo
            continue
        k += 1

    return SnfDecomposition(_freeze(u), _freeze(a), _freeze(v))

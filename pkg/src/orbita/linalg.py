"""Small dense linear algebra over the rationals.

Matrices are lists of rows of :class:`fractions.Fraction`.  Pivoting takes the
first nonzero entry in the column; with exact arithmetic no tie-breaking is
needed.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, SingularSystem

Matrix = list[list[Fraction]]


def to_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def _eliminate(m: Matrix) -> list[int]:
    """Reduce ``m`` in place to reduced row echelon form; return pivot columns."""
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        for i in range(r, n_rows):
            if m[i][c] != 0:
                break
        else:
            continue
        m[r], m[i] = m[i], m[r]
        piv = m[r][c]
        if piv != 1:
            m[r] = [x / piv for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return pivots


def rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    return len(_eliminate(to_matrix(rows)))


def inverse(a: Sequence[Sequence]) -> Matrix:
    n = len(a)
    if any(len(row) != n for row in a):
        raise DimensionMismatch("inverse needs a square matrix")
    aug = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(a)
    ]
    pivots = _eliminate(aug)
    if pivots[:n] != list(range(n)):
        raise SingularSystem(f"matrix of size {n} is singular")
    return [row[n:] for row in aug]


def solve(a: Sequence[Sequence], b: Sequence) -> list[Fraction]:
    """Solve the square system ``a x = b`` exactly."""
    n = len(a)
    if len(b) != n or any(len(row) != n for row in a):
        raise DimensionMismatch("solve needs a square system")
    aug = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(a, b)]
    pivots = _eliminate(aug)
    if pivots != list(range(n)):
        raise SingularSystem(f"system of size {n} is singular")
    return [row[n] for row in aug]


def mat_vec(m: Sequence[Sequence[Fraction]], v: Sequence) -> list[Fraction]:
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in m]

"""
Multi-Dirac Engine: Exact Linear Algebra
Gaussian elimination over ℚ on numpy object arrays of Fractions.

Pivots are chosen column by column from the left (lowest basis index first);
particular solutions set every free variable to zero.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from core.exceptions import StructuralError


def fraction_matrix(rows: Sequence[Sequence[object]]) -> np.ndarray:
    rows = [[Fraction(v) for v in row] for row in rows]
    width = len(rows[0]) if rows else 0
    if any(len(row) != width for row in rows):
        raise StructuralError("Ragged matrix")
    out = np.empty((len(rows), width), dtype=object)
    for i, row in enumerate(rows):
        out[i, :] = row
    return out


def row_reduce(matrix: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and the pivot column of each nonzero row."""
    a = matrix.copy()
    n_rows, n_cols = a.shape
    pivots: list[int] = []
    row = 0
    for col in range(n_cols):
        if row == n_rows:
            break
        # first row at or below `row` with a nonzero entry in this column
        for r in range(row, n_rows):
            if a[r, col] != 0:
                break
        else:
            continue
        if r != row:
            a[[row, r], :] = a[[r, row], :]
        a[row, :] = a[row, :] / a[row, col]
        for r in range(n_rows):
            if r != row and a[r, col] != 0:
                a[r, :] = a[r, :] - a[r, col] * a[row, :]
        pivots.append(col)
        row += 1
    return a, pivots


def solve(matrix: np.ndarray, rhs: Sequence[Fraction]) -> Optional[list[Fraction]]:
    """One exact solution of matrix · x = rhs, or None when inconsistent."""
    n_rows, n_cols = matrix.shape
    if len(rhs) != n_rows:
        raise StructuralError(f"Right-hand side has {len(rhs)} entries for {n_rows} rows")
    augmented = np.empty((n_rows, n_cols + 1), dtype=object)
    augmented[:, :n_cols] = matrix
    augmented[:, n_cols] = [Fraction(v) for v in rhs]
    reduced, pivots = row_reduce(augmented)
    if n_cols in pivots:
        return None
    x = [Fraction(0)] * n_cols
    for r, col in enumerate(pivots):
        x[col] = reduced[r, n_cols]
    return x


def nullspace(matrix: np.ndarray) -> list[list[Fraction]]:
    """Basis of {x : matrix · x = 0}, one vector per free column."""
    n_cols = matrix.shape[1]
    if matrix.shape[0] == 0:
        reduced, pivots = matrix, []
    else:
        reduced, pivots = row_reduce(matrix)
    basis = []
    for free in (c for c in range(n_cols) if c not in pivots):
        v = [Fraction(0)] * n_cols
        v[free] = Fraction(1)
        for r, col in enumerate(pivots):
            v[col] = -reduced[r, free]
        basis.append(v)
    return basis

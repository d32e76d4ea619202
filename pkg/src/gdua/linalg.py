"""Gaussian elimination over exact scalars.

Matrices are lists of rows of scalars.  Only what the classifiers need:
reduced row echelon form, kernels, and solving ``A x = b``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .scalar import Scalar

Matrix = list[list[Scalar]]


def rref(rows: Sequence[Sequence[Scalar]], ncols: int) -> tuple[Matrix, list[int]]:
    m = [list(r) for r in rows]
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        if row >= len(m):
            break
        pr = next((i for i in range(row, len(m)) if m[i][col] != 0), None)
        if pr is None:
            continue
        m[row], m[pr] = m[pr], m[row]
        inv = 1 / m[row][col]
        m[row] = [x * inv for x in m[row]]
        for i in range(len(m)):
            if i != row and m[i][col] != 0:
                factor = m[i][col]
                m[i] = [a - factor * b for a, b in zip(m[i], m[row])]
        pivots.append(col)
        row += 1
    return m[:row], pivots


def nullspace(rows: Sequence[Sequence[Scalar]], ncols: int) -> list[list[Scalar]]:
    """A basis of ``{x : A x = 0}``."""
    m, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v: list[Scalar] = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][fc]
        basis.append(v)
    return basis


def solve(rows: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar], ncols: int):
    """Solve ``A x = rhs``.

    Returns ``(particular, kernel_basis)`` or ``None`` if inconsistent.
    """
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    m, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x: list[Scalar] = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = m[r][ncols]
    return x, nullspace(rows, ncols)

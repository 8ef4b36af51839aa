"""Exact Gaussian elimination over Q."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple


def rref(rows: Sequence[Sequence[Fraction]], ncols: int | None = None) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    mat = [[Fraction(v) for v in r] for r in rows]
    if not mat:
        return [], []
    if ncols is None:
        ncols = len(mat[0])
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(mat)):
            if mat[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        pv = mat[r][c]
        if pv != 1:
            mat[r] = [v / pv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                row_r = mat[r]
                mat[i] = [a - f * b for a, b in zip(mat[i], row_r)]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> List[List[Fraction]]:
    """Basis of {x : rows . x = 0}, one vector per free column."""
    red, pivots = rref(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def solve_affine(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction], ncols: int):
    """All solutions of rows . x = rhs as (particular, nullspace basis), or None."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, ncols + 1) if aug else ([], [])
    if ncols in pivots:
        return None
    x0 = [Fraction(0)] * ncols
    for row, pc in zip(red, pivots):
        x0[pc] = row[ncols]
    return x0, nullspace([r[:ncols] for r in red], ncols)


def solve_square(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]):
    """Unique solution of a square system, or None when singular."""
    n = len(rows)
    sol = solve_affine(rows, rhs, n)
    if sol is None or sol[1]:
        return None
    return sol[0]

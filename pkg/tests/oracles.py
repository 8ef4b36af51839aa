"""Reference computations that share no code with the package.

Everything here is deliberately naive: Gaussian elimination over
Fractions, subset enumeration, orientation tests.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Sequence

F = Fraction


def solve(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> Optional[List[Fraction]]:
    """The unique solution of A x = b, or None if inconsistent or not unique."""
    rows = [list(map(F, r)) + [F(v)] for r, v in zip(A, b)]
    ncols = len(A[0]) if A else 0
    piv_row = 0
    pivots = []
    for c in range(ncols):
        r = next((i for i in range(piv_row, len(rows)) if rows[i][c] != 0), None)
        if r is None:
            continue
        rows[piv_row], rows[r] = rows[r], rows[piv_row]
        pv = rows[piv_row][c]
        rows[piv_row] = [v / pv for v in rows[piv_row]]
        for i in range(len(rows)):
            if i != piv_row and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * p for a, p in zip(rows[i], rows[piv_row])]
        pivots.append(c)
        piv_row += 1
    if any(all(v == 0 for v in r[:-1]) and r[-1] != 0 for r in rows):
        return None
    if len(pivots) < ncols:
        return None
    x = [F(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = rows[i][-1]
    return x


def barycentric(subset, q) -> Optional[List[Fraction]]:
    n = len(q)
    A = [[p[i] for p in subset] for i in range(n)] + [[F(1)] * len(subset)]
    return solve(A, list(q) + [F(1)])


def in_hull(points, q) -> bool:
    """Exhaustive Caratheodory: q is a convex combination of at most n+1 points."""
    pts = [tuple(map(F, p)) for p in points]
    q = tuple(map(F, q))
    n = len(q)
    for k in range(1, min(n + 1, len(pts)) + 1):
        for sub in combinations(pts, k):
            lam = barycentric(sub, q)
            if lam is not None and all(v >= 0 for v in lam):
                return True
    return False


def extreme_points(points) -> set:
    pts = list({tuple(map(F, p)) for p in points})
    return {p for p in pts if not in_hull([r for r in pts if r != p], p)}


def orient(a, b, c) -> Fraction:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def segments_meet(a, b, c, d) -> bool:
    o1, o2, o3, o4 = orient(a, b, c), orient(a, b, d), orient(c, d, a), orient(c, d, b)
    if o1 == o2 == 0:  # collinear: compare projections
        key = (lambda p: p[0]) if a[0] != b[0] or c[0] != d[0] else (lambda p: p[1])
        lo1, hi1 = sorted((key(a), key(b)))
        lo2, hi2 = sorted((key(c), key(d)))
        return max(lo1, lo2) <= min(hi1, hi2)
    return (o1 * o2 <= 0) and (o3 * o4 <= 0)


def hulls_meet_small(A, B) -> bool:
    """Hull intersection for the split shapes that occur with n+2 points, n <= 2."""
    n = len(A[0])
    if n == 1:
        return max(min(A), min(B)) <= min(max(A), max(B))
    if len(A) == 1:
        return in_hull(B, A[0])
    if len(B) == 1:
        return in_hull(A, B[0])
    assert n == 2 and len(A) == len(B) == 2
    return segments_meet(A[0], A[1], B[0], B[1])


def rand_rational(rng: random.Random, bound: int = 3, den: int = 4) -> Fraction:
    q = rng.randint(1, den)
    return F(rng.randint(-bound * q, bound * q), q)


def rand_point(rng: random.Random, dim: int, bound: int = 3, den: int = 4):
    return tuple(rand_rational(rng, bound, den) for _ in range(dim))


def interval_points(S, idx):
    return [S[i][0] for i in idx]

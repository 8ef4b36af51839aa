"""Constructive witnesses for the classical convexity theorems.

Each routine returns exact data that can be re-checked independently:
convex coefficients, a common point of two hulls, or a feasibility verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from .linalg import nullspace
from .lp import solve_lp
from .polytope import (
    DimensionMismatch,
    GeometryError,
    Polytope,
    contains,
    convex_coefficients,
)
from .rational import Point, combination, sub


class NotInHull(GeometryError):
    pass


@dataclass(frozen=True)
class CaratheodoryWitness:
    points: Tuple[Point, ...]
    coefficients: Tuple[Fraction, ...]

    def evaluate(self) -> Point:
        return combination(self.coefficients, self.points, len(self.points[0]))


def _as_points(points) -> List[Point]:
    return [tuple(Fraction(c) for c in p) for p in points]


def caratheodory_witness(points, q, anchor=None) -> CaratheodoryWitness:
    """At most n+1 of ``points`` whose hull contains ``q``, with coefficients.

    When ``anchor`` is given the witness contains it: the ray from the anchor
    through ``q`` is pushed to the boundary of the hull, where at most n
    points suffice, and ``q`` is recovered on the segment back to the anchor.
    """
    pts = sorted(set(_as_points(points)))
    q = tuple(Fraction(c) for c in q)
    n = len(q)
    if any(len(p) != n for p in pts):
        raise DimensionMismatch("points and q differ in dimension")
    if anchor is None:
        coeffs = convex_coefficients(pts, q)
        if coeffs is None:
            raise NotInHull("q is not in the convex hull of the points")
        support = [(p, c) for p, c in zip(pts, coeffs) if c]
        return CaratheodoryWitness(tuple(p for p, _ in support), tuple(c for _, c in support))

    anchor = tuple(Fraction(c) for c in anchor)
    if anchor not in pts:
        raise GeometryError("anchor is not one of the points")
    if q == anchor:
        return CaratheodoryWitness((anchor,), (Fraction(1),))
    # maximize t: anchor + t (q - anchor) = sum lambda_i p_i, sum lambda = 1
    d = sub(q, anchor)
    m = len(pts)
    A = [[p[i] for p in pts] + [-d[i]] for i in range(n)]
    A.append([Fraction(1)] * m + [Fraction(0)])
    b = list(anchor) + [Fraction(1)]
    c = [Fraction(0)] * m + [Fraction(1)]
    res = solve_lp(A, b, c)
    if res.status != "optimal":
        raise NotInHull("q is not in the convex hull of the points")
    t = res.value
    if t < 1:
        raise NotInHull("q is not in the convex hull of the points")
    lam = res.x[:m]
    # q = (1 - 1/t) anchor + (1/t) sum lambda_i p_i
    weights = {}
    weights[anchor] = 1 - 1 / t
    for p, l in zip(pts, lam):
        if l:
            weights[p] = weights.get(p, Fraction(0)) + l / t
    items = [(p, w) for p, w in weights.items() if w or p == anchor]
    items.sort(key=lambda pw: (pw[0] != anchor, pw[0]))
    return CaratheodoryWitness(tuple(p for p, _ in items), tuple(w for _, w in items))


def radon_partition(points) -> Tuple[Tuple[int, ...], Tuple[int, ...], Point]:
    """Split n+2 points of Q^n into two index sets with intersecting hulls.

    Returns (I1, I2, common point); I1 is the smaller side of the sign split
    of an affine dependence (ties go to the side holding index 0).
    """
    pts = _as_points(points)
    if not pts:
        raise GeometryError("need n+2 points")
    n = len(pts[0])
    if len(pts) != n + 2:
        raise GeometryError(f"Radon partition needs exactly {n + 2} points in dimension {n}, got {len(pts)}")
    rows = [[p[i] for p in pts] for i in range(n)] + [[Fraction(1)] * len(pts)]
    mu = nullspace(rows, len(pts))[0]
    pos = tuple(i for i, v in enumerate(mu) if v > 0)
    neg = tuple(i for i, v in enumerate(mu) if v < 0)
    total = sum(mu[i] for i in pos)
    common = combination([mu[i] / total for i in pos], [pts[i] for i in pos], n)
    if len(neg) < len(pos) or (len(neg) == len(pos) and 0 in neg):
        small = neg
    else:
        small = pos
    large = tuple(i for i in range(len(pts)) if i not in small)
    return small, large, common


def common_point(family: Sequence[Polytope]) -> Optional[Point]:
    """A point in the intersection of all members (exact LP), or None."""
    if not family:
        raise GeometryError("empty family")
    if any(P.is_empty for P in family):
        return None
    n = family[0].dim
    sizes = [len(P.vertices) for P in family]
    total = sum(sizes)
    A, b = [], []
    offsets = []
    off = 0
    for s in sizes:
        offsets.append(off)
        off += s
    # sum lambda^k = 1 for each k
    for k, s in enumerate(sizes):
        row = [Fraction(0)] * total
        for j in range(s):
            row[offsets[k] + j] = Fraction(1)
        A.append(row)
        b.append(Fraction(1))
    # point of member k equals point of member 0, coordinatewise
    first = family[0]
    for k in range(1, len(family)):
        P = family[k]
        for i in range(n):
            row = [Fraction(0)] * total
            for j, v in enumerate(first.vertices):
                row[j] = v[i]
            for j, v in enumerate(P.vertices):
                row[offsets[k] + j] -= v[i]
            A.append(row)
            b.append(Fraction(0))
    res = solve_lp(A, b)
    if res.status != "optimal":
        return None
    return combination(res.x[: sizes[0]], first.vertices, n)


def helly_verify(family: Sequence[Polytope], dim: int) -> bool:
    """Whether the Helly implication holds for this family (always, if sound)."""
    if any(P.dim != dim for P in family):
        raise DimensionMismatch("family members must share the ambient dimension")
    k = min(dim + 1, len(family))
    for sub_family in combinations(family, k):
        if common_point(sub_family) is None:
            return True  # premise fails
    return common_point(family) is not None


@dataclass(frozen=True)
class VisibilityCone:
    """{apex + sum t_i (apex - v_i) : t_i >= 0}; the whole space if degenerate."""

    apex: Point
    generators: Tuple[Point, ...]
    degenerate: bool


def visibility_cone(x: Polytope, p) -> VisibilityCone:
    if x.is_empty:
        raise GeometryError("visibility cone of the empty set is undefined")
    p = tuple(Fraction(c) for c in p)
    if contains(x, p):
        return VisibilityCone(p, (), True)
    gens = tuple(sorted({sub(p, v) for v in x.vertices}))
    return VisibilityCone(p, gens, False)


def cone_meets(w: VisibilityCone, y: Polytope) -> bool:
    """Whether ``y`` meets the cone; by construction iff ``apex`` is in x v y."""
    if y.is_empty:
        return False
    if w.degenerate:
        return True
    n = len(w.apex)
    g = len(w.generators)
    m = len(y.vertices)
    # apex + sum t_i g_i - sum mu_j u_j = 0, sum mu = 1, t, mu >= 0
    A = []
    for i in range(n):
        A.append([gen[i] for gen in w.generators] + [-u[i] for u in y.vertices])
    A.append([Fraction(0)] * g + [Fraction(1)] * m)
    b = [-c for c in w.apex] + [Fraction(1)]
    return solve_lp(A, b).status == "optimal"

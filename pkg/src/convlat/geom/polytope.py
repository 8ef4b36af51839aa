"""Canonical V-represented polytopes over Q and their lattice operations.

A :class:`Polytope` stores exactly its extreme points in lexicographic order,
so two polytopes are equal as sets iff they compare equal as values. The
empty polytope (no vertices) is a legal value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple

from ..kernels import dd_extreme_rays
from .linalg import rref, rank, solve_affine
from .lp import solve_lp
from .rational import Point, dot, format_point, sub, to_int_row


class GeometryError(ValueError):
    pass


class DimensionMismatch(GeometryError):
    pass


class UnboundedError(GeometryError):
    pass


class InconsistentEqualities(GeometryError):
    pass


@dataclass(frozen=True)
class Polytope:
    dim: int
    vertices: Tuple[Point, ...] = ()

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    def __repr__(self) -> str:
        if not self.vertices:
            return f"Polytope(dim={self.dim}, empty)"
        vs = ", ".join("(" + ",".join(format_point(v)) + ")" for v in self.vertices)
        return f"Polytope(dim={self.dim}, [{vs}])"

    def __contains__(self, q) -> bool:
        return contains(self, q)


@dataclass(frozen=True)
class HPolytope:
    """``normal . x <= offset`` for each inequality, ``normal . x == offset``
    for each equality."""

    dim: int
    inequalities: Tuple[Tuple[Point, Fraction], ...]
    equalities: Tuple[Tuple[Point, Fraction], ...] = ()

    def satisfies(self, x: Sequence[Fraction]) -> bool:
        return all(dot(a, x) <= b for a, b in self.inequalities) and all(
            dot(a, x) == b for a, b in self.equalities
        )


def empty(dim: int) -> Polytope:
    return Polytope(dim, ())


def _check_points(points: Iterable[Sequence], dim: int) -> List[Point]:
    out = []
    for p in points:
        if len(p) != dim:
            raise DimensionMismatch(f"point {p!r} does not have dimension {dim}")
        out.append(tuple(Fraction(c) for c in p))
    return out


# --- affine hulls ---------------------------------------------------------


@dataclass(frozen=True)
class AffineFrame:
    """The affine hull of a point set, parametrized by its pivot coordinates."""

    origin: Point
    pivots: Tuple[int, ...]
    rows: Tuple[Tuple[Fraction, ...], ...]  # rref of the direction space

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def local(self, x: Sequence[Fraction]) -> Point:
        return tuple(x[c] for c in self.pivots)

    def lift(self, y: Sequence[Fraction]) -> Point:
        x = list(self.origin)
        for yk, pk, row in zip(y, self.pivots, self.rows):
            t = yk - self.origin[pk]
            if t:
                for j, v in enumerate(row):
                    if v:
                        x[j] += t * v
        return tuple(x)

    def equalities(self) -> List[Tuple[Point, Fraction]]:
        n = len(self.origin)
        eqs = []
        for c in range(n):
            if c in self.pivots:
                continue
            normal = [Fraction(0)] * n
            normal[c] = Fraction(1)
            for pk, row in zip(self.pivots, self.rows):
                normal[pk] -= row[c]
            eqs.append((tuple(normal), dot(normal, self.origin)))
        return eqs


def affine_frame(points: Sequence[Point]) -> AffineFrame:
    origin = points[0]
    dirs = [sub(p, origin) for p in points[1:]]
    red, pivots = rref(dirs, len(origin)) if dirs else ([], [])
    return AffineFrame(origin, tuple(pivots), tuple(tuple(r) for r in red))


def _local_facets(ys: Sequence[Point], d: int) -> List[Tuple[Tuple[int, ...], int]]:
    """Facets ``a . y <= b`` (integer a, b) of a full-dimensional point set."""
    if d == 1:
        lo = min(y[0] for y in ys)
        hi = max(y[0] for y in ys)
        out = []
        for a, b in ((-1, -lo), (1, hi)):
            row = to_int_row([Fraction(a), b])
            out.append(((row[0],), row[1]))
        return out
    rows = [to_int_row([-c for c in y] + [Fraction(1)]) for y in ys]
    rays = dd_extreme_rays(rows, d + 1)
    return [(tuple(r[:d]), r[d]) for r in rays if any(r[:d])]


# --- hull ------------------------------------------------------------------


def hull(points: Iterable[Sequence], dim: int) -> Polytope:
    """Canonical V-representation of the convex hull of ``points``."""
    pts = sorted(set(_check_points(points, dim)))
    if len(pts) <= 1:
        return Polytope(dim, tuple(pts))
    frame = affine_frame(pts)
    d = frame.dim
    if d == 0:
        return Polytope(dim, (pts[0],))
    ys = [frame.local(p) for p in pts]
    if d == 1:
        lo = min(range(len(ys)), key=lambda i: ys[i][0])
        hi = max(range(len(ys)), key=lambda i: ys[i][0])
        return Polytope(dim, tuple(sorted({pts[lo], pts[hi]})))
    facets = _local_facets(ys, d)
    keep = []
    for p, y in zip(pts, ys):
        tight = [a for a, b in facets if dot(a, y) == b]
        if len(tight) >= d and rank(tight) == d:
            keep.append(p)
    return Polytope(dim, tuple(sorted(keep)))


def polytope(points: Iterable[Sequence], dim: Optional[int] = None) -> Polytope:
    pts = list(points)
    if dim is None:
        if not pts:
            raise GeometryError("dimension required for an empty point list")
        dim = len(pts[0])
    return hull(pts, dim)


# --- H-representation ------------------------------------------------------


def _normalize_ineq(normal: Sequence[Fraction], offset: Fraction) -> Tuple[Point, Fraction]:
    ints = to_int_row(list(normal) + [offset])
    g = 0
    for v in ints[:-1]:
        g = gcd(g, v)
    return tuple(Fraction(v // g) for v in ints[:-1]), Fraction(ints[-1], g)


def _normalize_eq(normal: Sequence[Fraction], offset: Fraction) -> Tuple[Point, Fraction]:
    a, b = _normalize_ineq(normal, offset)
    for v in a:
        if v:
            if v < 0:
                a = tuple(-c for c in a)
                b = -b
            break
    return a, b


@lru_cache(maxsize=65536)
def to_h_rep(P: Polytope) -> HPolytope:
    """Facets and affine-hull equalities of ``P`` (normalized, sorted)."""
    n = P.dim
    if P.is_empty:
        return HPolytope(n, (((Fraction(0),) * n, Fraction(-1)),), ())
    pts = list(P.vertices)
    frame = affine_frame(pts)
    eqs = sorted(_normalize_eq(a, b) for a, b in frame.equalities())
    ineqs = []
    if frame.dim > 0:
        ys = [frame.local(p) for p in pts]
        for a, b in _local_facets(ys, frame.dim):
            normal = [Fraction(0)] * n
            for ak, pk in zip(a, frame.pivots):
                normal[pk] = Fraction(ak)
            ineqs.append(_normalize_ineq(normal, Fraction(b)))
    return HPolytope(n, tuple(sorted(ineqs)), tuple(eqs))


def _vertex_enumeration(dim: int, ineqs, eqs) -> Optional[List[Point]]:
    """Vertices of {x : ineqs, eqs}; None when the equalities are inconsistent.

    Raises UnboundedError if the solution set is unbounded.
    """
    if eqs:
        sol = solve_affine([a for a, _ in eqs], [b for _, b in eqs], dim)
        if sol is None:
            return None
        x0, basis = sol
    else:
        x0 = [Fraction(0)] * dim
        basis = [[Fraction(int(i == j)) for i in range(dim)] for j in range(dim)]
    k = len(basis)
    if k == 0:
        return [tuple(x0)] if all(dot(a, x0) <= b for a, b in ineqs) else []
    rows = []
    for a, b in ineqs:
        coeffs = [-dot(a, v) for v in basis]
        slack = b - dot(a, x0)
        if not any(coeffs):
            if slack < 0:
                return []
            continue
        rows.append(to_int_row(coeffs + [slack]))
    rows.append([0] * k + [1])
    try:
        rays = dd_extreme_rays(rows, k + 1)
    except ValueError:
        raise UnboundedError("solution set is unbounded") from None
    out = set()
    for r in rays:
        s = r[k]
        if s == 0:
            raise UnboundedError("solution set is unbounded")
        x = list(x0)
        for tk, v in zip(r[:k], basis):
            if tk:
                t = Fraction(tk, s)
                for j in range(dim):
                    if v[j]:
                        x[j] += t * v[j]
        out.add(tuple(x))
    return sorted(out)


def from_h_rep(H: HPolytope) -> Polytope:
    verts = _vertex_enumeration(H.dim, H.inequalities, H.equalities)
    if verts is None:
        raise InconsistentEqualities("equalities have no common solution")
    return Polytope(H.dim, tuple(verts))


# --- lattice operations ----------------------------------------------------


def _same_dim(P: Polytope, Q: Polytope) -> None:
    if P.dim != Q.dim:
        raise DimensionMismatch(f"dimensions differ: {P.dim} vs {Q.dim}")


def join(P: Polytope, Q: Polytope) -> Polytope:
    _same_dim(P, Q)
    if P.is_empty or P == Q:
        return Q
    if Q.is_empty:
        return P
    return hull(P.vertices + Q.vertices, P.dim)


@lru_cache(maxsize=65536)
def _meet_cached(P: Polytope, Q: Polytope) -> Polytope:
    HP, HQ = to_h_rep(P), to_h_rep(Q)
    verts = _vertex_enumeration(
        P.dim, HP.inequalities + HQ.inequalities, HP.equalities + HQ.equalities
    )
    return Polytope(P.dim, tuple(verts or ()))


def meet(P: Polytope, Q: Polytope) -> Polytope:
    _same_dim(P, Q)
    if P.is_empty:
        return P
    if Q.is_empty or P == Q:
        return Q
    if P.vertices > Q.vertices:
        P, Q = Q, P
    return _meet_cached(P, Q)


def join_all(items: Sequence[Polytope], dim: int) -> Polytope:
    pts = [v for P in items for v in P.vertices]
    return hull(pts, dim)


def meet_all(items: Sequence[Polytope], dim: int) -> Polytope:
    if not items:
        raise GeometryError("meet of an empty family has no polytope value")
    acc = items[0]
    for P in items[1:]:
        acc = meet(acc, P)
        if acc.is_empty:
            break
    return acc


# --- membership ------------------------------------------------------------


def convex_coefficients(points: Sequence[Point], q: Sequence[Fraction]) -> Optional[List[Fraction]]:
    """A basic convex combination of ``points`` equal to ``q``, or None."""
    if not points:
        return None
    n = len(q)
    A = [[p[i] for p in points] for i in range(n)] + [[Fraction(1)] * len(points)]
    b = list(q) + [Fraction(1)]
    res = solve_lp(A, b)
    return res.x if res.status == "optimal" else None


def contains(P: Polytope, q: Sequence) -> bool:
    if len(q) != P.dim:
        raise DimensionMismatch(f"point of dimension {len(q)} vs polytope of dimension {P.dim}")
    if P.is_empty:
        return False
    q = tuple(Fraction(c) for c in q)
    if q in P.vertices:
        return True
    return convex_coefficients(P.vertices, q) is not None


def leq(P: Polytope, Q: Polytope) -> bool:
    """Set inclusion P <= Q."""
    _same_dim(P, Q)
    if P.is_empty:
        return True
    if Q.is_empty:
        return False
    H = to_h_rep(Q)
    return all(H.satisfies(v) for v in P.vertices)


def affine_dimension(P: Polytope) -> int:
    if P.is_empty:
        return -1
    return affine_frame(list(P.vertices)).dim


# --- polar duality ---------------------------------------------------------


def origin_strictly_interior(P: Polytope) -> bool:
    if P.is_empty:
        return False
    H = to_h_rep(P)
    return not H.equalities and all(b > 0 for _, b in H.inequalities)


def polar_dual(P: Polytope) -> Polytope:
    """{q : q.p <= 1 for all p in P}; requires 0 strictly inside P."""
    if not origin_strictly_interior(P):
        raise GeometryError("origin is not strictly interior; the polar would be unbounded")
    ineqs = [(v, Fraction(1)) for v in P.vertices]
    verts = _vertex_enumeration(P.dim, ineqs, [])
    return Polytope(P.dim, tuple(verts))

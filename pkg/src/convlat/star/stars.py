"""Unions of segments [0, p_i / a_i] through the origin, closed relative to
S = union of the segments [0, p_i].

Relative convexity is governed by the circuits of the ray family: for a
circuit sum c_i p_i = 0 in which c_j alone has its sign, the hull reaches
ray j at inverse length sum_{i != j} (c_i / -c_j) a_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from ..geom import polytope as gp
from ..geom.rational import dot
from ..geom.linalg import nullspace, rank
from ..geom.rational import Point, format_point
from .extrational import INF, ExtRational, ext_mul, format_ext, parse_ext

RAY_GUARD = 12


class StarError(ValueError):
    pass


class StarClosureDiverged(StarError):
    """The repair iteration hit its cap without reaching a fixpoint."""


@dataclass(frozen=True)
class Circuit:
    members: Tuple[int, ...]
    coefficients: Tuple[Fraction, ...]  # first entry is +1
    distinguished: Optional[int]  # ray index j, or None when unflagged

    @property
    def flagged(self) -> bool:
        return self.distinguished is not None

    def bound_terms(self) -> List[Tuple[int, Fraction]]:
        """(i, c_i / -c_j) for i != j; all factors are positive."""
        j = self.distinguished
        cj = self.coefficients[self.members.index(j)]
        return [(i, c / -cj) for i, c in zip(self.members, self.coefficients) if i != j]


def _positive_multiple(p: Point, q: Point) -> bool:
    if rank([p, q]) > 1:
        return False
    k = next(i for i, v in enumerate(p) if v)
    return q[k] / p[k] > 0


def circuits(points: Sequence[Sequence]) -> List[Circuit]:
    """All minimal linearly dependent subfamilies, in size then index order."""
    pts = [tuple(Fraction(c) for c in p) for p in points]
    m = len(pts)
    if m > RAY_GUARD:
        raise StarError(f"{m} rays exceed the guard of {RAY_GUARD}")
    for i, p in enumerate(pts):
        if not any(p):
            raise StarError(f"ray {i} is the zero vector")
        for j in range(i):
            if _positive_multiple(pts[j], p):
                raise StarError(f"rays {j} and {i} point in the same direction")
    dim = len(pts[0]) if pts else 0
    out: List[Circuit] = []
    dependent_minimal: List[frozenset] = []
    for k in range(2, min(m, dim + 1) + 1):
        for T in combinations(range(m), k):
            Ts = frozenset(T)
            if any(c < Ts for c in dependent_minimal):
                continue
            cols = [[pts[t][r] for t in T] for r in range(dim)]
            ns = nullspace(cols, k)
            if len(ns) != 1 or not all(ns[0]):
                continue
            v = ns[0]
            v = [c / v[0] for c in v]
            pos = [t for t, c in zip(T, v) if c > 0]
            neg = [t for t, c in zip(T, v) if c < 0]
            j = None
            if k >= 3:
                if len(neg) == 1:
                    j = neg[0]
                elif len(pos) == 1:
                    j = pos[0]
            dependent_minimal.append(Ts)
            out.append(Circuit(T, tuple(v), j))
    return out


class StarConfig:
    def __init__(self, rays: Sequence[Sequence]):
        self.rays: Tuple[Point, ...] = tuple(tuple(Fraction(c) for c in p) for p in rays)
        if not self.rays:
            raise StarError("a star configuration needs at least one ray")
        self.dim = len(self.rays[0])
        if any(len(p) != self.dim for p in self.rays):
            raise gp.DimensionMismatch("rays must share the dimension")
        self.circuits = circuits(self.rays)
        self.flagged = [c for c in self.circuits if c.flagged]
        self._terms = [(c.distinguished, c.bound_terms()) for c in self.flagged]
        self.cap = max(1, len(self.flagged) * len(self.rays) * 16)

    def __len__(self) -> int:
        return len(self.rays)

    def __reduce__(self):
        return (StarConfig, (self.rays,))

    def element(self, values) -> "StarElement":
        a = tuple(v if v is INF else Fraction(v) for v in (parse_ext(x) if isinstance(x, str) else x for x in values))
        return star_closure(self, a)

    def segment(self, i: int, a: ExtRational = Fraction(1)) -> "StarElement":
        vals = [INF] * len(self.rays)
        vals[i] = a
        return self.element(vals)

    def circuit_bound(self, terms, a) -> ExtRational:
        total: ExtRational = Fraction(0)
        for i, f in terms:
            total = total + ext_mul(f, a[i])
            if total is INF:
                return INF
        return total


@dataclass(frozen=True)
class StarElement:
    config: StarConfig
    a: Tuple[ExtRational, ...]

    def __eq__(self, other):
        return isinstance(other, StarElement) and self.config is other.config and self.a == other.a

    def __hash__(self):
        return hash(self.a)

    def __str__(self):
        return "[" + ",".join(format_ext(v) for v in self.a) + "]"

    def points(self) -> List[Point]:
        """Origin plus the segment endpoints p_i / a_i."""
        out = [(Fraction(0),) * self.config.dim]
        for p, v in zip(self.config.rays, self.a):
            if v is not INF:
                out.append(tuple(c / v for c in p))
        return out

    def polytope(self) -> gp.Polytope:
        return gp.hull(self.points(), self.config.dim)


def _check_raw(config: StarConfig, a) -> None:
    if len(a) != len(config.rays):
        raise StarError(f"expected {len(config.rays)} inverse lengths, got {len(a)}")
    for v in a:
        if v is not INF and not (isinstance(v, Fraction) and v >= 1):
            raise StarError(f"inverse length {v!r} is not in [1, inf]")


def star_closure(config: StarConfig, a: Sequence[ExtRational]) -> StarElement:
    """Smallest relatively convex star containing the given segments.

    Runs the circuit repairs on the ray family without clipping (the hull
    may reach past a segment end), then clips every length at 1, which is
    intersecting with S.
    """
    vals = [v if v is INF else Fraction(v) for v in a]
    _check_raw(config, vals)
    repairs = 0
    changed = True
    while changed:
        changed = False
        for j, terms in config._terms:
            b = config.circuit_bound(terms, vals)
            if b < vals[j]:
                vals[j] = b
                repairs += 1
                changed = True
                if repairs > config.cap:
                    raise StarClosureDiverged(
                        f"no fixpoint after {config.cap} repairs; current values "
                        + "[" + ",".join(format_ext(v) for v in vals) + "]"
                    )
    return StarElement(config, tuple(v if v is INF else max(v, Fraction(1)) for v in vals))


def is_star_convex(e: StarElement) -> bool:
    return star_closure(e.config, e.a).a == e.a


def circuit_conditions_hold(e: StarElement) -> bool:
    """Circuit inequalities, required wherever segment j is not already full."""
    for j, terms in e.config._terms:
        if e.a[j] is not INF and e.a[j] == 1:
            continue
        if e.config.circuit_bound(terms, e.a) < e.a[j]:
            return False
    return True


def star_meet(u: StarElement, v: StarElement) -> StarElement:
    return StarElement(u.config, tuple(max(x, y) for x, y in zip(u.a, v.a)))


def star_join(u: StarElement, v: StarElement) -> StarElement:
    return star_closure(u.config, tuple(min(x, y) for x, y in zip(u.a, v.a)))


def star_leq(u: StarElement, v: StarElement) -> bool:
    return all(x >= y for x, y in zip(u.a, v.a))


def geometric_closure(config: StarConfig, a: Sequence[ExtRational]) -> Tuple[ExtRational, ...]:
    """Independent oracle: read c.h.(segments) & S off the exact facets.

    Along ray p_j the hull extends to t_max = min b / (n . p_j) over facets
    n . x <= b with n . p_j > 0 (equalities must vanish on p_j).
    """
    e = StarElement(config, tuple(v if v is INF else Fraction(v) for v in a))
    H = gp.to_h_rep(e.polytope())
    out = []
    for p in config.rays:
        if any(dot(n, p) != 0 for n, _ in H.equalities):
            out.append(INF)
            continue
        ts = [b / dot(n, p) for n, b in H.inequalities if dot(n, p) > 0]
        t = min(ts) if ts else None
        if t is None:
            raise StarError("unbounded hull")
        out.append(INF if t == 0 else max(1 / t, Fraction(1)))
    return tuple(out)


# --- rational surrogates ------------------------------------------------------

HEXAGON_P = ((Fraction(1), Fraction(0)), (Fraction(1), Fraction(1)), (Fraction(0), Fraction(1)))


def hexagon_config() -> StarConfig:
    """Rays p1, p2, p3, -p1, -p2, -p3 with p2 = p1 + p3."""
    ps = list(HEXAGON_P)
    return StarConfig(ps + [tuple(-c for c in p) for p in ps])


def snow_to_star(config: StarConfig, s) -> StarElement:
    """[a1,a2,a3] -> the centrally symmetric hexagon star."""
    return StarElement(config, tuple(s.a) + tuple(s.a))


def octagon_config() -> StarConfig:
    """Rays toward (2,1), (1,2), (-1,2), (-2,1) and their negatives."""
    half = [(2, 1), (1, 2), (-1, 2), (-2, 1)]
    return StarConfig([tuple(map(Fraction, p)) for p in half] + [tuple(Fraction(-c) for c in p) for p in half])


def describe_star(e: StarElement) -> Dict:
    return {"a": [format_ext(v) for v in e.a], "endpoints": [format_point(p) for p in e.points()[1:]]}

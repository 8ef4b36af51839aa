"""Relatively convex subsets of a finite ground set S in Q^n.

An element is a frozenset of indices into S that equals c.h.(itself) & S.
By Caratheodory's theorem c.h.(A) is the union of the hulls of the affinely
independent subsets of A with at most n+1 points, so the closure of A is
the union of precomputed masks over those subsets.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from ..geom import polytope as gp
from ..geom.io import DataError
from ..geom.linalg import rref
from ..geom.rational import Point, format_point, parse_point
from ..terms.check import LatticeHandle, LatticeMismatch, SamplerConfig

ENUMERATION_GUARD = 20


class GroundSet:
    """A finite point set with eager hull-membership masks."""

    def __init__(self, points: Sequence[Sequence], dim: Optional[int] = None):
        pts = [tuple(Fraction(c) for c in p) for p in points]
        if not pts and dim is None:
            raise ValueError("dimension required for an empty ground set")
        self.dim = dim if dim is not None else len(pts[0])
        if any(len(p) != self.dim for p in pts):
            raise gp.DimensionMismatch("ground points must share the dimension")
        if len(set(pts)) != len(pts):
            raise ValueError("ground set has duplicate points")
        self.points: Tuple[Point, ...] = tuple(pts)
        self.index: Dict[Point, int] = {p: i for i, p in enumerate(pts)}
        self._masks: Dict[int, int] = {}
        for k in range(1, self.dim + 2):
            for T in combinations(range(len(pts)), k):
                mask = self._hull_mask(T)
                if mask:
                    self._masks[sum(1 << i for i in T)] = mask
        self._generators = sorted(self._masks)

    def __len__(self) -> int:
        return len(self.points)

    def _hull_mask(self, T: Tuple[int, ...]) -> int:
        """Mask of ground points in c.h.(T), or 0 when T is affinely dependent."""
        k = len(T)
        n = self.dim
        m = len(self.points)
        # rows: coordinates then the affine row; columns: T, then every ground point
        rows = []
        for i in range(n):
            rows.append([self.points[t][i] for t in T] + [p[i] for p in self.points])
        rows.append([Fraction(1)] * (k + m))
        red, pivots = rref(rows, k + m)
        if pivots[:k] != list(range(k)):
            return 0
        mask = 0
        for s in range(m):
            col = k + s
            # consistent iff no row beyond the T-pivots carries this column
            if any(row[col] for row in red[k:]):
                continue
            if all(red[r][col] >= 0 for r in range(k)):
                mask |= 1 << s
        return mask

    def closure_mask(self, A: int) -> int:
        out = A
        for g in self._generators:
            if g & A == g:
                out |= self._masks[g]
        return out

    def to_mask(self, idx) -> int:
        m = 0
        for i in idx:
            m |= 1 << i
        return m

    @staticmethod
    def from_mask(mask: int) -> FrozenSet[int]:
        out = []
        i = 0
        while mask:
            if mask & 1:
                out.append(i)
            mask >>= 1
            i += 1
        return frozenset(out)


def rel_closure(S, A) -> FrozenSet[int]:
    """Indices of c.h.(A) & S for an index set (or point set) A of S."""
    G = S if isinstance(S, GroundSet) else GroundSet(S)
    idx = _indices(G, A)
    return G.from_mask(G.closure_mask(G.to_mask(idx)))


def _indices(G: GroundSet, A) -> List[int]:
    out = []
    for a in A:
        if isinstance(a, int):
            if not 0 <= a < len(G):
                raise ValueError(f"index {a} outside the ground set")
            out.append(a)
        else:
            p = tuple(Fraction(c) for c in a)
            if p not in G.index:
                raise ValueError(f"point {format_point(p)} is not in the ground set")
            out.append(G.index[p])
    return out


def enumerate_closed_sets(S) -> List[FrozenSet[int]]:
    """All relatively convex subsets, in NextClosure (lectic) order."""
    G = S if isinstance(S, GroundSet) else GroundSet(S)
    m = len(G)
    if m > ENUMERATION_GUARD:
        raise ValueError(f"ground set of size {m} exceeds the enumeration guard {ENUMERATION_GUARD}")
    out = []
    A = G.closure_mask(0)
    full = (1 << m) - 1
    while True:
        out.append(G.from_mask(A))
        if A == full:
            break
        # NextClosure: largest i not in A whose closure adds nothing smaller
        for i in range(m - 1, -1, -1):
            bit = 1 << i
            if A & bit:
                continue
            low = A & (bit - 1)
            B = G.closure_mask(low | bit)
            if B & (bit - 1) == low:
                A = B
                break
    return out


def order_pairs(sets: Sequence[FrozenSet[int]]) -> List[Tuple[int, int]]:
    return [(i, j) for i, a in enumerate(sets) for j, b in enumerate(sets) if a <= b]


class RelConvLattice(LatticeHandle):
    """RelConv(S); with ``base_point`` set, the interval above {p}."""

    def __init__(self, ground: GroundSet, base_point: Optional[int] = None, source: str = "<inline>"):
        self.ground = ground
        self.base_point = base_point
        if base_point is not None:
            if not 0 <= base_point < len(ground):
                raise ValueError(f"point index {base_point} outside the ground set")
            self.selector = f"relconv-pointed:{source}:{base_point}"
        else:
            self.selector = f"relconv:{source}"

    @classmethod
    def from_points(cls, points, base_point: Optional[int] = None, source: str = "<inline>"):
        return cls(GroundSet(points), base_point, source)

    @property
    def dim(self) -> int:
        return self.ground.dim

    def closure(self, idx) -> FrozenSet[int]:
        G = self.ground
        return G.from_mask(G.closure_mask(G.to_mask(_indices(G, idx))))

    def element(self, points_or_indices) -> FrozenSet[int]:
        idx = list(_indices(self.ground, points_or_indices))
        if self.base_point is not None:
            idx.append(self.base_point)
        return self.closure(idx)

    @property
    def bottom(self) -> FrozenSet[int]:
        return self.closure([] if self.base_point is None else [self.base_point])

    def meet(self, a, b):
        return a & b

    def join(self, a, b):
        G = self.ground
        return G.from_mask(G.closure_mask(G.to_mask(a | b)))

    def leq(self, a, b) -> bool:
        return a <= b

    def validate(self, e) -> None:
        if not isinstance(e, frozenset):
            raise LatticeMismatch(f"expected a frozenset of ground indices, got {type(e).__name__}")
        if self.closure(e) != e:
            raise LatticeMismatch("subset is not relatively convex")
        if self.base_point is not None and self.base_point not in e:
            raise LatticeMismatch("element does not contain the base point")

    def describe(self, e):
        return [format_point(self.ground.points[i]) for i in sorted(e)]

    def parse_element(self, obj):
        if not isinstance(obj, list):
            raise DataError("relconv element must be a list of points or indices")
        items = []
        for k, raw in enumerate(obj):
            if isinstance(raw, int) and not isinstance(raw, bool):
                items.append(raw)
            else:
                items.append(parse_point(raw, self.dim, f"element[{k}]"))
        try:
            e = frozenset(_indices(self.ground, items))
        except ValueError as exc:
            raise DataError(str(exc)) from None
        self.validate(e)
        return e

    def check_sampler(self, config: SamplerConfig) -> None:
        if config.dim != self.dim:
            raise ValueError(f"sampler dim {config.dim} does not match the ground set")

    def sample(self, rng: random.Random, config: Optional[SamplerConfig]):
        config = config or SamplerConfig(self.dim)
        m = len(self.ground)
        k = min(m, rng.randint(config.min_points, config.max_points))
        return self.element(rng.sample(range(m), k))

    def witness(self, big, small):
        extra = sorted(big - small)
        return format_point(self.ground.points[extra[0]]) if extra else None

    def hull_view(self, e) -> gp.Polytope:
        """The isomorphic hull-lattice image c.h.(e)."""
        return gp.hull([self.ground.points[i] for i in e], self.dim)


def hull_lattice_R1_meet_check(S, x, y) -> bool:
    """c.h.(x) & c.h.(y) == c.h.(x & y) for relatively convex x, y in S of Q^1."""
    G = S if isinstance(S, GroundSet) else GroundSet(S)
    if G.dim != 1:
        raise ValueError("this check is specific to dimension 1")
    xi, yi = frozenset(_indices(G, x)), frozenset(_indices(G, y))
    for e in (xi, yi):
        if G.from_mask(G.closure_mask(G.to_mask(e))) != e:
            raise ValueError("inputs must be relatively convex")
    hx = gp.hull([G.points[i] for i in xi], 1)
    hy = gp.hull([G.points[i] for i in yi], 1)
    hxy = gp.hull([G.points[i] for i in xi & yi], 1)
    return gp.meet(hx, hy) == hxy

"""Conv(Q^n) on canonical polytopes and its pointed sublattice above {0}."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import List, Optional

from ..geom import polytope as gp
from ..geom.io import DataError, polytope_from_json, polytope_to_json
from ..geom.polytope import Polytope
from ..geom.rational import Point, format_point
from ..terms.check import LatticeHandle, LatticeMismatch, SamplerConfig


def random_point(rng: random.Random, config: SamplerConfig) -> Point:
    out = []
    for _ in range(config.dim):
        q = rng.randint(1, config.denominator)
        out.append(Fraction(rng.randint(-config.coord_bound * q, config.coord_bound * q), q))
    return tuple(out)


def random_generators(rng: random.Random, config: SamplerConfig) -> List[Point]:
    k = rng.randint(config.min_points, config.max_points)
    pts = [random_point(rng, config) for _ in range(k)]
    if config.include_origin:
        pts.append((Fraction(0),) * config.dim)
    return pts


class PolytopeLattice(LatticeHandle):
    def __init__(self, dim: int):
        if dim < 1:
            raise ValueError("dimension must be >= 1")
        self.dim = dim
        self.selector = f"conv:{dim}"

    def __reduce__(self):
        return (type(self), (self.dim,))

    def meet(self, a: Polytope, b: Polytope) -> Polytope:
        return gp.meet(a, b)

    def join(self, a: Polytope, b: Polytope) -> Polytope:
        return gp.join(a, b)

    def leq(self, a: Polytope, b: Polytope) -> bool:
        return gp.leq(a, b)

    @property
    def bottom(self) -> Polytope:
        return gp.empty(self.dim)

    def element(self, points) -> Polytope:
        return gp.hull(points, self.dim)

    def validate(self, e) -> None:
        if not isinstance(e, Polytope):
            raise LatticeMismatch(f"expected a Polytope, got {type(e).__name__}")
        if e.dim != self.dim:
            raise LatticeMismatch(f"polytope of dimension {e.dim} used in {self.selector}")

    def describe(self, e: Polytope):
        return polytope_to_json(e)

    def parse_element(self, obj) -> Polytope:
        if isinstance(obj, list):
            obj = {"dim": self.dim, "vertices": obj}
        P = polytope_from_json(obj)
        if P.dim != self.dim:
            raise DataError(f"polytope of dimension {P.dim} given for {self.selector}")
        self.validate(P)
        return P

    def check_sampler(self, config: SamplerConfig) -> None:
        if config.dim != self.dim:
            raise ValueError(f"sampler dim {config.dim} does not match {self.selector}")

    def sample(self, rng: random.Random, config: Optional[SamplerConfig]) -> Polytope:
        config = config or SamplerConfig(self.dim)
        return gp.hull(random_generators(rng, config), self.dim)

    def witness(self, big: Polytope, small: Polytope):
        for v in big.vertices:
            if not gp.contains(small, v):
                return format_point(v)
        return None


class PointedPolytopeLattice(PolytopeLattice):
    """Convex polytopes containing the origin; bottom is {0}."""

    def __init__(self, dim: int):
        super().__init__(dim)
        self.selector = f"pointed:{dim}"
        self.origin = (Fraction(0),) * dim

    @property
    def bottom(self) -> Polytope:
        return Polytope(self.dim, (self.origin,))

    def element(self, points) -> Polytope:
        return gp.hull(list(points) + [self.origin], self.dim)

    def validate(self, e) -> None:
        super().validate(e)
        if not gp.contains(e, self.origin):
            raise LatticeMismatch("element of a pointed lattice must contain the origin")

    def sample(self, rng: random.Random, config: Optional[SamplerConfig]) -> Polytope:
        config = config or SamplerConfig(self.dim)
        pts = random_generators(rng, config)
        if not config.include_origin:
            pts.append(self.origin)
        return gp.hull(pts, self.dim)


def jsd_premise_sampler(dim: int, seed, config: Optional[SamplerConfig] = None):
    """(x, y1, y2) with x | y1 = x | y2 by construction.

    Every vertex of v = x | y1 outside x lies in y1; y2 is the hull of those
    vertices plus a random subset of the remaining vertices of v and a few
    random points of v.
    """
    rng = random.Random(f"jsd:{seed}")
    config = config or SamplerConfig(dim, min_points=1, max_points=4)
    x = gp.hull(random_generators(rng, config), dim)
    y1 = gp.hull(random_generators(rng, config), dim)
    v = gp.join(x, y1)
    outside = [p for p in v.vertices if not gp.contains(x, p)]
    inside = [p for p in v.vertices if p not in outside]
    chosen = outside + [p for p in inside if rng.random() < 0.5]
    for _ in range(rng.randint(0, 2)):
        # a random convex combination of vertices of v
        w = [Fraction(rng.randint(0, 3)) for _ in v.vertices]
        s = sum(w)
        if s:
            chosen.append(tuple(sum(wi * p[i] for wi, p in zip(w, v.vertices)) / s for i in range(dim)))
    if not chosen:
        chosen = list(v.vertices)
    y2 = gp.hull(chosen, dim)
    return x, y1, y2

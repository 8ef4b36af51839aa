"""Chain experiments in star lattices."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List

from .extrational import INF
from .stars import (
    StarConfig,
    StarElement,
    circuit_conditions_hold,
    geometric_closure,
    octagon_config,
    star_join,
    star_leq,
    star_meet,
)

CHAIN_RAYS = ((0, 3), (1, 2), (2, 1), (3, 0))


@dataclass
class ChainReport:
    elements: List[StarElement]
    strict_ascents: int
    all_convex: bool
    all_below_y: bool

    def to_json(self) -> dict:
        return {
            "rays": [list(map(str, p)) for p in CHAIN_RAYS],
            "elements": [str(e) for e in self.elements],
            "strict_ascents": self.strict_ascents,
            "all_relatively_convex": self.all_convex,
            "all_below_y": self.all_below_y,
        }


def chain_generators(config: StarConfig):
    h = Fraction(2)
    x1 = config.element([1, h, INF, INF])
    y = config.element([INF, 1, 1, INF])
    x2 = config.element([INF, INF, h, 1])
    return x1, y, x2


def ascending_chain_experiment(steps: int) -> ChainReport:
    """Start at x1 & y; alternately apply (- | x2) & y and (- | x1) & y."""
    if steps < 1:
        raise ValueError("steps must be >= 1")
    config = StarConfig([tuple(map(Fraction, p)) for p in CHAIN_RAYS])
    x1, y, x2 = chain_generators(config)
    chain = [star_meet(x1, y)]
    ascents = 0
    for k in range(steps):
        other = x2 if k % 2 == 0 else x1
        nxt = star_meet(star_join(chain[-1], other), y)
        if star_leq(chain[-1], nxt) and nxt != chain[-1]:
            ascents += 1
        chain.append(nxt)
    convex = all(circuit_conditions_hold(e) and geometric_closure(config, e.a) == e.a for e in chain)
    below = all(star_leq(e, y) for e in chain)
    return ChainReport(chain, ascents, convex, below)


@dataclass
class OctagonReport:
    elements: List[StarElement]
    longest_chain: List[StarElement] = field(default_factory=list)
    antichain: List[StarElement] = field(default_factory=list)
    exhausted: bool = False

    def to_json(self) -> dict:
        return {
            "elements": len(self.elements),
            "exhausted": self.exhausted,
            "longest_chain_length": len(self.longest_chain),
            "longest_chain": [str(e) for e in self.longest_chain],
            "antichain_size": len(self.antichain),
            "antichain": [str(e) for e in self.antichain],
        }


def diameters(config: StarConfig) -> List[StarElement]:
    half = len(config) // 2
    out = []
    for i in range(half):
        vals = [INF] * len(config)
        vals[i] = vals[i + half] = Fraction(1)
        out.append(config.element(vals))
    return out


def _size_key(e: StarElement):
    # finite-entry count then sum of lengths: larger sets sort later
    lengths = [Fraction(1) / v for v in e.a if v is not INF]
    return (len(lengths), sum(lengths), tuple(str(v) for v in e.a))


def longest_chain(elements: List[StarElement]) -> List[StarElement]:
    order = sorted(elements, key=_size_key)
    best = {}
    prev = {}
    for i, e in enumerate(order):
        best[i], prev[i] = 1, None
        for j in range(i):
            f = order[j]
            if f != e and star_leq(f, e) and best[j] + 1 > best[i]:
                best[i], prev[i] = best[j] + 1, j
    if not order:
        return []
    k = max(best, key=lambda i: (best[i], -i))
    out = []
    while k is not None:
        out.append(order[k])
        k = prev[k]
    return out[::-1]


def greedy_antichain(elements: List[StarElement]) -> List[StarElement]:
    """Greedy antichain, scanning elements grouped by number of finite entries."""
    best: List[StarElement] = []
    groups = sorted({_size_key(e)[0] for e in elements})
    for g in groups:
        chosen: List[StarElement] = []
        for e in sorted((e for e in elements), key=lambda e: (abs(_size_key(e)[0] - g), _size_key(e))):
            if all(not star_leq(e, f) and not star_leq(f, e) for f in chosen):
                chosen.append(e)
        if len(chosen) > len(best):
            best = chosen
    return best


def octagon_exploration(max_elements: int) -> OctagonReport:
    """Breadth-first closure of the four octagon diameters under meet and join."""
    config = octagon_config()
    gens = diameters(config)
    seen = set(gens)
    order = list(gens)
    queue = deque(gens)
    exhausted = True
    while queue:
        e = queue.popleft()
        for f in list(order):
            for r in (star_meet(e, f), star_join(e, f)):
                if r in seen:
                    continue
                if len(order) >= max_elements:
                    exhausted = False
                    continue
                seen.add(r)
                order.append(r)
                queue.append(r)
        if not exhausted and len(order) >= max_elements:
            break
    return OctagonReport(order, longest_chain(order), greedy_antichain(order), exhausted)

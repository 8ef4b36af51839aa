"""Finite closure systems and the Caratheodory criterion for D_n.

A closure system here is a finite ground set with a closure operator on
bitmasks, given either by implication rules A -> b or by an arbitrary
extensive, monotone, idempotent function (for instance relative convex
closure in a point set). Finite ground sets make every closure finitary.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Tuple

from ..geom.io import DataError
from .finite import FiniteLattice

GROUND_GUARD = 10


def _bits(mask: int) -> List[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


class ClosureSystem:
    def __init__(self, ground: Sequence[Hashable], rules: Sequence[Tuple[Sequence[int], int]] = (),
                 operator: Optional[Callable[[int], int]] = None):
        self.ground = list(ground)
        if len(set(self.ground)) != len(self.ground):
            raise DataError("duplicate ground elements")
        if len(self.ground) > GROUND_GUARD:
            raise DataError(f"|X| = {len(self.ground)} exceeds the guard {GROUND_GUARD}")
        n = len(self.ground)
        self.rules: Tuple[Tuple[int, int], ...] = tuple(
            (sum(1 << a for a in prem), 1 << c) for prem, c in rules
        )
        for prem, c in self.rules:
            if prem >> n or c >> n:
                raise DataError("rule mentions an element outside the ground set")
        self._operator = operator
        self._cache: Dict[int, int] = {}

    @property
    def full(self) -> int:
        return (1 << len(self.ground)) - 1

    def closure(self, mask: int) -> int:
        hit = self._cache.get(mask)
        if hit is not None:
            return hit
        out = mask
        if self._operator is not None:
            out = self._operator(out)
        changed = bool(self.rules)
        while changed:
            changed = False
            for prem, c in self.rules:
                if prem & out == prem and not c & out:
                    out |= c
                    changed = True
        self._cache[mask] = out
        return out

    def labels(self, mask: int) -> List[Hashable]:
        return [self.ground[i] for i in _bits(mask)]

    def closed_sets(self) -> List[int]:
        return sorted({self.closure(m) for m in range(self.full + 1)}, key=lambda m: (bin(m).count("1"), m))

    def verify_operator(self) -> None:
        """Extensive, monotone and idempotent on every subset."""
        for A in range(self.full + 1):
            c = self.closure(A)
            if c & A != A or self.closure(c) != c:
                raise ValueError("closure is not extensive and idempotent")
            for i in range(len(self.ground)):
                if self.closure(A | 1 << i) & c != c:
                    raise ValueError("closure is not monotone")

    @classmethod
    def from_json(cls, obj) -> "ClosureSystem":
        if not isinstance(obj, dict) or "ground" not in obj:
            raise DataError('closure system needs a "ground" list')
        ground = obj["ground"]
        if not isinstance(ground, list):
            raise DataError('"ground" must be a list')
        ix = {g: i for i, g in enumerate(ground)}
        rules = []
        for k, r in enumerate(obj.get("rules", [])):
            try:
                prem = [ix[a] for a in r["if"]]
                concl = ix[r["then"]]
            except (KeyError, TypeError) as exc:
                raise DataError(f"rule {k} is malformed or names an unknown element: {exc}") from None
            rules.append((prem, concl))
        return cls(ground, rules)

    def to_json(self) -> dict:
        return {
            "ground": self.ground,
            "rules": [{"if": self.labels(p), "then": self.labels(c)[0]} for p, c in self.rules],
        }


def load_closure_system(path) -> ClosureSystem:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except json.JSONDecodeError as exc:
        raise DataError(f"{path}: invalid JSON: {exc}") from None
    return ClosureSystem.from_json(obj)


def from_ground_set(ground) -> ClosureSystem:
    """Relative convex closure of a GroundSet as a closure system."""
    return ClosureSystem(list(range(len(ground))), operator=ground.closure_mask)


def closed_set_lattice(C: ClosureSystem) -> FiniteLattice:
    sets = C.closed_sets()
    return FiniteLattice(sets, lambda i, j: sets[i] & sets[j] == sets[i])


def minimal_generators(C: ClosureSystem, p: int) -> List[int]:
    """Inclusion-minimal F, not containing p, with p in cl(F)."""
    bit = 1 << p
    rest = C.full & ~bit
    hits = []
    sub = rest
    while True:
        if C.closure(sub) & bit:
            hits.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & rest
    hitset = set(hits)
    return sorted(
        (F for F in hits if not any((F & ~(1 << q)) in hitset for q in _bits(F))),
        key=lambda F: (bin(F).count("1"), F),
    )


def _set_partitions(items: List[int], k: int):
    """Partitions of ``items`` into exactly k nonempty unlabeled blocks."""
    if k == 0:
        if not items:
            yield []
        return
    if len(items) < k:
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest, k - 1):
        yield [[first]] + part
    for part in _set_partitions(rest, k):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def dn_failure(C: ClosureSystem, n: int) -> Optional[Tuple[int, List[int]]]:
    """A failing D_n instance in the closed-set lattice, or None.

    Exact reduction: if p lies in the left side of a failing instance then
    the instance with x = cl({p}) fails too, and shrinking each y_i to the
    closure of its share of a minimal generating set of p keeps it failing.
    So it suffices to try x = cl({p}), y_i = cl(G_i) for the partitions of
    minimal generating sets F of p into n+1 nonempty blocks G_i.
    Returns (p, block masks).
    """
    for p in range(len(C.ground)):
        xp = C.closure(1 << p)
        for F in minimal_generators(C, p):
            for blocks in _set_partitions(_bits(F), n + 1):
                masks = [sum(1 << q for q in b) for b in blocks]
                acc = 0
                for i in range(n + 1):
                    others = 0
                    for j, m in enumerate(masks):
                        if j != i:
                            others |= C.closure(m)
                    acc |= xp & C.closure(others)
                if C.closure(acc) & xp != xp:
                    return p, masks
    return None


def caratheodory_failure(C: ClosureSystem, n: int) -> Optional[Tuple[int, int]]:
    """(S, point) with the point in cl(S) but in no cl(T), T in S, |T| <= n."""
    for S in range(C.full + 1):
        covered = 0
        members = _bits(S)
        for k in range(min(n, len(members)) + 1):
            for T in combinations(members, k):
                covered |= C.closure(sum(1 << t for t in T))
        missing = C.closure(S) & ~covered
        if missing:
            return S, _bits(missing)[0]
    return None


@dataclass
class Lemma24Report:
    n: int
    status: str  # "checked" or "skipped"
    dn_holds: Optional[bool] = None
    caratheodory_holds: Optional[bool] = None
    dn_witness: Optional[dict] = None
    caratheodory_witness: Optional[dict] = None
    reason: str = ""
    closed_sets: int = 0

    @property
    def agrees(self) -> Optional[bool]:
        if self.status != "checked":
            return None
        return self.dn_holds == self.caratheodory_holds

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "status": self.status,
            "closed_sets": self.closed_sets,
            "dn_holds": self.dn_holds,
            "caratheodory_holds": self.caratheodory_holds,
            "biconditional": self.agrees,
            "dn_witness": self.dn_witness,
            "caratheodory_witness": self.caratheodory_witness,
            "reason": self.reason,
        }


def singleton_hypothesis(C: ClosureSystem, L: Optional[FiniteLattice] = None) -> Optional[int]:
    """First element whose singleton closure is not join-irreducible, else None."""
    L = L or closed_set_lattice(C)
    for p in range(len(C.ground)):
        if not L.is_join_irreducible(L.index[C.closure(1 << p)]):
            return p
    return None


def check_lemma24(C: ClosureSystem, n: int) -> Lemma24Report:
    if n < 1:
        raise ValueError("n must be >= 1")
    L = closed_set_lattice(C)
    bad = singleton_hypothesis(C, L)
    if bad is not None:
        return Lemma24Report(n, "skipped", closed_sets=len(L),
                             reason=f"closure of {{{C.ground[bad]!r}}} is not join-irreducible")
    rep = Lemma24Report(n, "checked", closed_sets=len(L))
    dn = dn_failure(C, n)
    rep.dn_holds = dn is None
    if dn is not None:
        p, blocks = dn
        rep.dn_witness = {"x": C.labels(C.closure(1 << p)), "ys": [C.labels(C.closure(b)) for b in blocks]}
    car = caratheodory_failure(C, n)
    rep.caratheodory_holds = car is None
    if car is not None:
        rep.caratheodory_witness = {"set": C.labels(car[0]), "point": C.ground[car[1]]}
    return rep


def random_closure_system(seed, max_points: int = 6) -> ClosureSystem:
    rng = random.Random(f"closure:{seed}")
    size = rng.randint(3, max_points)
    rules = []
    for _ in range(rng.randint(1, 6)):
        concl = rng.randrange(size)
        others = [i for i in range(size) if i != concl]
        prem = rng.sample(others, rng.randint(1, min(3, len(others))))
        rules.append((sorted(prem), concl))
    return ClosureSystem([f"e{i}" for i in range(size)], rules)

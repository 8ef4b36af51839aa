"""Finite lattices given by their order, with exhaustive property checks."""

from __future__ import annotations

from itertools import combinations, product
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Tuple

import numpy as np

from ..terms.ast import Identity
from ..terms.check import LatticeHandle, LatticeMismatch, check

SEARCH_GUARD = 60


class NotALattice(ValueError):
    pass


class FiniteLattice:
    """Elements ``labels[0..n-1]`` with order, meet and join tables.

    Meets are read off down-sets: the meet of a and b is the element whose
    down-set equals down(a) & down(b), and it exists iff such an element
    does. Lattice axioms are then re-verified exhaustively on the tables.
    """

    def __init__(self, labels: Sequence[Hashable], leq: Callable[[int, int], bool], validate: bool = True):
        self.labels = list(labels)
        n = len(self.labels)
        if n == 0:
            raise NotALattice("a lattice has at least one element")
        self.index: Dict[Hashable, int] = {e: i for i, e in enumerate(self.labels)}
        down = [0] * n
        up = [0] * n
        for i in range(n):
            for j in range(n):
                if leq(i, j):
                    down[j] |= 1 << i
                    up[i] |= 1 << j
        self.down, self.up = down, up
        for i in range(n):
            if not (down[i] >> i) & 1:
                raise NotALattice("order is not reflexive")
        by_down = {d: i for i, d in enumerate(down)}
        by_up = {u: i for i, u in enumerate(up)}
        if len(by_down) != n:
            raise NotALattice("order is not antisymmetric")
        meet = [[0] * n for _ in range(n)]
        join = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                m = by_down.get(down[i] & down[j])
                J = by_up.get(up[i] & up[j])
                if m is None or J is None:
                    raise NotALattice(f"elements {self.labels[i]!r} and {self.labels[j]!r} lack a meet or join")
                meet[i][j] = meet[j][i] = m
                join[i][j] = join[j][i] = J
        self.meet_table = meet
        self.join_table = join
        if validate:
            self.validate()

    def __len__(self) -> int:
        return len(self.labels)

    def leq(self, a: int, b: int) -> bool:
        return bool((self.down[b] >> a) & 1)

    def meet(self, a: int, b: int) -> int:
        return self.meet_table[a][b]

    def join(self, a: int, b: int) -> int:
        return self.join_table[a][b]

    @property
    def bottom(self) -> int:
        return min(range(len(self)), key=lambda i: bin(self.down[i]).count("1"))

    @property
    def top(self) -> int:
        return max(range(len(self)), key=lambda i: bin(self.down[i]).count("1"))

    def validate(self) -> None:
        """Exhaustive check of the lattice axioms and order agreement."""
        M = np.array(self.meet_table, dtype=np.int32)
        J = np.array(self.join_table, dtype=np.int32)
        n = len(self)
        idx = np.arange(n)
        for T, name in ((M, "meet"), (J, "join")):
            if not (T == T.T).all():
                raise NotALattice(f"{name} is not commutative")
            if not (T[idx, idx] == idx).all():
                raise NotALattice(f"{name} is not idempotent")
            for a in range(n):
                # (a o b) o c versus a o (b o c), for all b, c
                if not (T[T[a]] == T[a][T]).all():
                    raise NotALattice(f"{name} is not associative")
        if not (M[idx[:, None], J] == idx[:, None]).all() or not (J[idx[:, None], M] == idx[:, None]).all():
            raise NotALattice("absorption fails")
        bits = np.array([[(self.down[b] >> a) & 1 for b in range(n)] for a in range(n)], dtype=bool)
        if not (bits == (M == idx[:, None])).all():
            raise NotALattice("order and meet disagree")

    def dual(self) -> "FiniteLattice":
        return FiniteLattice(self.labels, lambda i, j: self.leq(j, i), validate=False)

    def lower_covers(self, a: int) -> List[int]:
        below = [b for b in range(len(self)) if b != a and self.leq(b, a)]
        return [b for b in below if not any(c != b and self.leq(b, c) for c in below)]

    def is_join_irreducible(self, a: int) -> bool:
        return len(self.lower_covers(a)) == 1

    def leq_pairs(self) -> List[Tuple[int, int]]:
        return [(a, b) for a in range(len(self)) for b in range(len(self)) if self.leq(a, b)]


def from_pairs(labels: Sequence[Hashable], pairs) -> FiniteLattice:
    """Lattice from explicit (a, b) meaning a <= b; reflexive-transitive closure taken."""
    labels = list(labels)
    n = len(labels)
    ix = {e: i for i, e in enumerate(labels)}
    rel = [[i == j for j in range(n)] for i in range(n)]
    for a, b in pairs:
        if a not in ix or b not in ix:
            raise NotALattice(f"pair ({a!r}, {b!r}) mentions an unknown element")
        rel[ix[a]][ix[b]] = True
    for k in range(n):
        for i in range(n):
            if rel[i][k]:
                for j in range(n):
                    if rel[k][j]:
                        rel[i][j] = True
    return FiniteLattice(labels, lambda i, j: rel[i][j])


def chain(n: int) -> FiniteLattice:
    return FiniteLattice(list(range(n)), lambda i, j: i <= j)


def boolean_lattice(k: int) -> FiniteLattice:
    return FiniteLattice(list(range(1 << k)), lambda i, j: i & j == i)


def mk_lattice(k: int) -> FiniteLattice:
    """M_k: bottom "0", atoms "a1".."ak", top "1"."""
    labels = ["0"] + [f"a{i}" for i in range(1, k + 1)] + ["1"]
    return FiniteLattice(labels, lambda i, j: i == j or i == 0 or j == k + 1)


def find_Mk(L: FiniteLattice, k: int) -> Optional[dict]:
    """Elements 0' < y_1..y_k < 1' with pairwise meets 0' and joins 1'."""
    if k < 3:
        raise ValueError("M_k search needs k >= 3")
    if len(L) > SEARCH_GUARD:
        raise ValueError(f"lattice of size {len(L)} exceeds the search guard {SEARCH_GUARD}")
    n = len(L)
    for lo in range(n):
        for hi in range(n):
            if lo == hi or not L.leq(lo, hi):
                continue
            cands = [y for y in range(n) if y not in (lo, hi) and L.leq(lo, y) and L.leq(y, hi)]
            if len(cands) < k:
                continue
            adj = {y: {z for z in cands if z != y and L.meet(y, z) == lo and L.join(y, z) == hi} for y in cands}

            def grow(clique, pool):
                if len(clique) == k:
                    return clique
                for z in sorted(pool):
                    got = grow(clique + [z], {w for w in pool if w > z} & adj[z])
                    if got:
                        return got
                return None

            found = grow([], set(cands))
            if found:
                return {"bottom": lo, "top": hi, "atoms": found}
    return None


def is_njsd(L: FiniteLattice, n: int) -> Tuple[bool, Optional[tuple]]:
    """Exhaustive n-join semidistributivity; returns (holds, witness (x, ys))."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if len(L) > SEARCH_GUARD:
        raise ValueError(f"lattice of size {len(L)} exceeds the search guard {SEARCH_GUARD}")
    N = len(L)
    for x in range(N):
        groups: Dict[int, List[int]] = {}
        for y in range(N):
            groups.setdefault(L.join(x, y), []).append(y)
        for target, ys in groups.items():
            # repeated y's make the conclusion automatic, so distinct tuples suffice
            for tup in combinations(ys, n + 1):
                acc = None
                for i, j in combinations(tup, 2):
                    m = L.meet(i, j)
                    acc = m if acc is None else L.join(acc, m)
                if L.join(x, acc) != target:
                    return False, (x, tup)
    return True, None


def is_nmsd(L: FiniteLattice, n: int) -> Tuple[bool, Optional[tuple]]:
    return is_njsd(L.dual(), n)


class FiniteLatticeHandle(LatticeHandle):
    """LatticeHandle over element indices of a FiniteLattice."""

    def __init__(self, L: FiniteLattice, name: str = "finite"):
        self.L = L
        self.selector = name

    def meet(self, a, b):
        return self.L.meet(a, b)

    def join(self, a, b):
        return self.L.join(a, b)

    def leq(self, a, b):
        return self.L.leq(a, b)

    def validate(self, e):
        if not isinstance(e, int) or not 0 <= e < len(self.L):
            raise LatticeMismatch(f"{e!r} is not an element index")

    def describe(self, e):
        return repr(self.L.labels[e])

    def sample(self, rng, config):
        return rng.randrange(len(self.L))


def satisfies_exhaustively(L: FiniteLattice, identity: Identity, limit: int = 2_000_000) -> Tuple[bool, Optional[dict]]:
    """Check ``identity`` on every assignment; returns (holds, failing assignment)."""
    k = len(identity.free_vars)
    if len(L) ** k > limit:
        raise ValueError(f"{len(L)}^{k} assignments exceed the limit {limit}")
    H = FiniteLatticeHandle(L)
    for values in product(range(len(L)), repeat=k):
        asg = dict(zip(identity.free_vars, values))
        if not check(identity, H, asg).holds:
            return False, asg
    return True, None


def lattice_from_json(obj) -> FiniteLattice:
    """{"elements": [...], "leq": [[a, b], ...]} with a <= b; closure is taken."""
    from ..geom.io import DataError

    if not isinstance(obj, dict) or "elements" not in obj:
        raise DataError('finite lattice needs an "elements" list')
    try:
        return from_pairs(obj["elements"], [tuple(p) for p in obj.get("leq", [])])
    except (NotALattice, TypeError) as exc:
        raise DataError(f"not a lattice: {exc}") from None

"""Partition lattices Equiv(B) and lattices of difference subspaces."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterator, List, Sequence, Tuple

from ..geom.linalg import rref
from .finite import FiniteLattice

PARTITION_GUARD = 7

Partition = Tuple[Tuple[int, ...], ...]


def canonical_partition(blocks) -> Partition:
    return tuple(sorted(tuple(sorted(b)) for b in blocks if b))


def validate_partition(R: Partition, size: int) -> None:
    seen = [x for b in R for x in b]
    if sorted(seen) != list(range(size)) or any(not b for b in R):
        raise ValueError(f"{R!r} is not a partition of {size} elements")


def partitions(size: int) -> Iterator[Partition]:
    """All partitions of {0..size-1}, via restricted growth strings."""
    def grow(prefix, top):
        if len(prefix) == size:
            blocks: Dict[int, List[int]] = {}
            for i, b in enumerate(prefix):
                blocks.setdefault(b, []).append(i)
            yield canonical_partition(blocks.values())
            return
        for b in range(top + 2):
            yield from grow(prefix + [b], max(top, b))
    if size == 0:
        yield ()
        return
    yield from grow([0], 0)


def refines(R: Partition, T: Partition) -> bool:
    where = {x: i for i, b in enumerate(T) for x in b}
    return all(len({where[x] for x in b}) == 1 for b in R)


def pair_mask(R: Partition, size: int) -> int:
    """Bit a*size+b set for every related pair a < b."""
    m = 0
    for b in R:
        for x, y in combinations(b, 2):
            m |= 1 << (x * size + y)
    return m


def partition_meet(R: Partition, T: Partition) -> Partition:
    return canonical_partition(set(a) & set(b) for a in R for b in T)


def partition_join(R: Partition, T: Partition) -> Partition:
    """Transitive closure of the union, by union-find."""
    parent = {x: x for b in R for x in b}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for b in list(R) + list(T):
        for x in b[1:]:
            parent[find(x)] = find(b[0])
    groups: Dict[int, List[int]] = {}
    for x in parent:
        groups.setdefault(find(x), []).append(x)
    return canonical_partition(groups.values())


def partition_lattice(size: int) -> FiniteLattice:
    if size > PARTITION_GUARD:
        raise ValueError(f"|B| = {size} exceeds the guard {PARTITION_GUARD}")
    if size < 0:
        raise ValueError("|B| must be nonnegative")
    elems = list(partitions(size))
    masks = [pair_mask(R, size) for R in elems]
    return FiniteLattice(elems, lambda i, j: masks[i] & masks[j] == masks[i])


@dataclass(frozen=True)
class DiffSubspace:
    """Subspace of Q^B spanned by differences e_a - e_b, kept in rref."""

    size: int
    rows: Tuple[Tuple[Fraction, ...], ...]

    @classmethod
    def span(cls, size: int, vectors) -> "DiffSubspace":
        vecs = [tuple(Fraction(v) for v in vec) for vec in vectors]
        for v in vecs:
            if len(v) != size:
                raise ValueError("vector length differs from |B|")
            if sum(v) != 0:
                raise ValueError("not in the span of difference vectors")
        if not vecs:
            return cls(size, ())
        red, _ = rref(vecs, size)
        return cls(size, tuple(tuple(r) for r in red))

    @classmethod
    def of_pairs(cls, size: int, pairs) -> "DiffSubspace":
        return cls.span(size, [difference(size, a, b) for a, b in pairs])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, v) -> bool:
        v = [Fraction(x) for x in v]
        return DiffSubspace.span(self.size, list(self.rows) + [tuple(v)]).dim == self.dim

    def __le__(self, other: "DiffSubspace") -> bool:
        return all(other.contains(r) for r in self.rows)

    def __add__(self, other: "DiffSubspace") -> "DiffSubspace":
        return DiffSubspace.span(self.size, list(self.rows) + list(other.rows))

    def pairs(self) -> List[Tuple[int, int]]:
        """Pairs a < b with e_a - e_b in the subspace, i.e. W meets S in S_ab."""
        return [(a, b) for a, b in combinations(range(self.size), 2) if self.contains(difference(self.size, a, b))]

    def meet(self, other: "DiffSubspace") -> "DiffSubspace":
        """Span of W1 n W2 n S."""
        common = set(self.pairs()) & set(other.pairs())
        return DiffSubspace.of_pairs(self.size, sorted(common))


def difference(size: int, a: int, b: int) -> Tuple[Fraction, ...]:
    v = [Fraction(0)] * size
    v[a] += 1
    v[b] -= 1
    return tuple(v)


def phi(R: Partition, size: int) -> DiffSubspace:
    validate_partition(R, size)
    return DiffSubspace.of_pairs(size, [(blk[0], x) for blk in R for x in blk[1:]])


def psi(W: DiffSubspace) -> Partition:
    related = {a: {a} for a in range(W.size)}
    for a, b in W.pairs():
        related[a].add(b)
        related[b].add(a)
    return canonical_partition({frozenset(s) for s in related.values()})


def difference_subspaces(size: int) -> List[DiffSubspace]:
    """Every subspace spanned by a subset of S, found from subsets of pairs."""
    pairs = list(combinations(range(size), 2))
    seen: Dict[DiffSubspace, None] = {}
    for mask in range(1 << len(pairs)):
        W = DiffSubspace.of_pairs(size, [p for i, p in enumerate(pairs) if mask >> i & 1])
        seen.setdefault(W, None)
    return list(seen)


def subspace_lattice(size: int) -> FiniteLattice:
    if size > 5:
        raise ValueError("subspace enumeration is limited to |B| <= 5")
    elems = difference_subspaces(size)
    return FiniteLattice(elems, lambda i, j: elems[i] <= elems[j])


def verify_isomorphism(size: int) -> dict:
    """Compare Equiv(B) with the subspace lattice through phi and psi, table by table."""
    E = partition_lattice(size)
    W = subspace_lattice(size)
    to_w = [W.index[phi(R, size)] for R in E.labels]
    to_e = [E.index[psi(S)] for S in W.labels]
    report = {
        "size": size,
        "partitions": len(E),
        "subspaces": len(W),
        "psi_phi_identity": all(to_e[to_w[i]] == i for i in range(len(E))),
        "phi_psi_identity": all(to_w[to_e[j]] == j for j in range(len(W))),
        "order_preserved": all(E.leq(i, j) == W.leq(to_w[i], to_w[j]) for i in range(len(E)) for j in range(len(E))),
        "meet_preserved": all(to_w[E.meet(i, j)] == W.meet(to_w[i], to_w[j]) for i in range(len(E)) for j in range(len(E))),
        "join_preserved": all(to_w[E.join(i, j)] == W.join(to_w[i], to_w[j]) for i in range(len(E)) for j in range(len(E))),
        "described_ops_agree": all(
            W.labels[W.meet(a, b)] == W.labels[a].meet(W.labels[b]) and W.labels[W.join(a, b)] == W.labels[a] + W.labels[b]
            for a in range(len(W)) for b in range(len(W))
        ),
    }
    report["isomorphic"] = all(v for k, v in report.items() if isinstance(v, bool))
    return report

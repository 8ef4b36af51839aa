"""Relativized lattices: x &_S y = join_i (x & y & S_i), x |_S y = x | y."""

from __future__ import annotations

from typing import Sequence

from ..terms.check import LatticeHandle, LatticeMismatch


class RelativizedLattice(LatticeHandle):
    """Elements of ``base`` fixed by int(x) = join_i (x & S_i)."""

    def __init__(self, base: LatticeHandle, pieces: Sequence):
        if not pieces:
            raise ValueError("relativize needs at least one piece")
        for S in pieces:
            base.validate(S)
        self.base = base
        self.pieces = tuple(pieces)
        self.selector = f"relativized({base.selector}, {len(self.pieces)} pieces)"

    def interior(self, x):
        acc = None
        for S in self.pieces:
            part = self.base.meet(x, S)
            acc = part if acc is None else self.base.join(acc, part)
        return acc

    def is_fixed(self, x) -> bool:
        return self.base.equal(self.interior(x), x)

    def meet(self, a, b):
        return self.interior(self.base.meet(a, b))

    def join(self, a, b):
        return self.base.join(a, b)

    def leq(self, a, b) -> bool:
        return self.base.leq(a, b)

    def equal(self, a, b) -> bool:
        return self.base.equal(a, b)

    def validate(self, e) -> None:
        self.base.validate(e)
        if not self.is_fixed(e):
            raise LatticeMismatch("element is not fixed by the interior operator")

    def describe(self, e):
        return self.base.describe(e)

    def parse_element(self, obj):
        e = self.base.parse_element(obj)
        self.validate(e)
        return e

    def check_sampler(self, config) -> None:
        self.base.check_sampler(config)

    def sample(self, rng, config):
        return self.interior(self.base.sample(rng, config))

    def witness(self, big, small):
        return self.base.witness(big, small)


def relativize(base: LatticeHandle, pieces: Sequence) -> RelativizedLattice:
    return RelativizedLattice(base, pieces)

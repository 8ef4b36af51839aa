"""Lattice selector strings: conv:<n>, pointed:<n>, relconv:<path>,
relconv-pointed:<path>:<point-index>."""

from __future__ import annotations

from ..geom.io import DataError, load_ground_set
from ..terms.check import LatticeHandle
from .conv import PointedPolytopeLattice, PolytopeLattice
from .relconv import GroundSet, RelConvLattice


def lattice_from_selector(selector: str) -> LatticeHandle:
    kind, _, rest = selector.partition(":")
    if kind in ("conv", "pointed"):
        try:
            n = int(rest)
        except ValueError:
            raise DataError(f"bad lattice selector {selector!r}: dimension must be an integer") from None
        if n < 1:
            raise DataError(f"bad lattice selector {selector!r}: dimension must be >= 1")
        return PolytopeLattice(n) if kind == "conv" else PointedPolytopeLattice(n)
    if kind == "relconv":
        if not rest:
            raise DataError("relconv selector needs a ground-set file")
        dim, pts = load_ground_set(rest)
        return RelConvLattice(GroundSet(pts, dim), None, rest)
    if kind == "relconv-pointed":
        path, sep, idx = rest.rpartition(":")
        if not sep or not path:
            raise DataError("relconv-pointed selector is relconv-pointed:<path>:<point-index>")
        try:
            k = int(idx)
        except ValueError:
            raise DataError(f"bad point index {idx!r}") from None
        dim, pts = load_ground_set(path)
        if not 0 <= k < len(pts):
            raise DataError(f"point index {k} outside the ground set of size {len(pts)}")
        return RelConvLattice(GroundSet(pts, dim), k, path)
    raise DataError(f"unknown lattice selector {selector!r}")

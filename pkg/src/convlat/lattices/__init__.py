"""Lattice adapters: polytopes, pointed polytopes, relatively convex sets."""

from .conv import PointedPolytopeLattice, PolytopeLattice, jsd_premise_sampler
from .relativize import RelativizedLattice, relativize
from .relconv import (
    GroundSet,
    RelConvLattice,
    enumerate_closed_sets,
    hull_lattice_R1_meet_check,
    order_pairs,
    rel_closure,
)
from .selector import lattice_from_selector

"""Exact rational polytopes: hulls, membership, lattice operations, witnesses."""

from .polytope import (
    DimensionMismatch,
    GeometryError,
    HPolytope,
    InconsistentEqualities,
    Polytope,
    UnboundedError,
    affine_dimension,
    contains,
    empty,
    from_h_rep,
    hull,
    join,
    join_all,
    leq,
    meet,
    meet_all,
    origin_strictly_interior,
    polar_dual,
    to_h_rep,
)
from .rational import Point, RationalParseError, format_point, parse_rational, point
from .witnesses import (
    CaratheodoryWitness,
    NotInHull,
    VisibilityCone,
    caratheodory_witness,
    common_point,
    cone_meets,
    helly_verify,
    radon_partition,
    visibility_cone,
)

__all__ = [name for name in dir() if not name.startswith("_")]

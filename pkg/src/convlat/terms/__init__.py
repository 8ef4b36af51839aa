"""Lattice terms, identity builders, and the identity checker."""

from .ast import (
    HOLE,
    Identity,
    Join,
    Meet,
    Term,
    TermSyntaxError,
    Var,
    join_of,
    meet_of,
    parse_identity,
    parse_term,
    print_identity,
    print_term,
    variables,
)
from .builders import (
    build_Dn,
    build_Dn_N_ary,
    build_Dn_op,
    build_radon_identity,
    build_wrapped_Dn,
    build_wrapped_Dn_op,
    build_x26,
    build_x27,
    builtin_identity,
    dualize,
    wrap,
)

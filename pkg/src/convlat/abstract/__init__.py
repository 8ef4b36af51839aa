"""Finite lattices: partition lattices, difference subspaces, closure systems."""

from .closure import (
    ClosureSystem,
    Lemma24Report,
    caratheodory_failure,
    check_lemma24,
    closed_set_lattice,
    dn_failure,
    from_ground_set,
    load_closure_system,
    minimal_generators,
    random_closure_system,
    singleton_hypothesis,
)
from .finite import (
    FiniteLattice,
    FiniteLatticeHandle,
    NotALattice,
    boolean_lattice,
    chain,
    find_Mk,
    from_pairs,
    is_njsd,
    is_nmsd,
    lattice_from_json,
    mk_lattice,
    satisfies_exhaustively,
)
from .partitions import (
    DiffSubspace,
    canonical_partition,
    partition_join,
    partition_lattice,
    partition_meet,
    partitions,
    phi,
    psi,
    subspace_lattice,
    verify_isomorphism,
)

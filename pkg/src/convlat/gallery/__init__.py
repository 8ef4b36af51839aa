"""Named counterexamples with their expected verdicts."""

from .entries import (
    REGISTRY,
    Counterpart,
    GalleryEntry,
    GalleryError,
    build_entry,
    dn_fail_conv,
    dnop_fail_conv,
    pythagorean_half_circle,
    radon_fail,
    relconv_d1op_fail,
    relconv_wrapped_fail,
    witness_rechecks,
    wrapped_dn_fail_pointed,
    wrapped_dnop_fail_pointed,
)
from .suite import run_all, run_entry

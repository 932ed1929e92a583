"""Exact divisor arithmetic, section counts and log Fano censuses on split
projective bundles over projective spaces, quadrics and P1 x P1."""

from ._core import (
    Variety,
    anticanonical,
    census,
    check,
    gallery,
    h0,
    h0_lattice,
    index_of,
    is_ample,
    is_effective,
    is_nef,
    member_status,
    pseudoindex_of,
)

__all__ = [
    "Variety",
    "anticanonical",
    "census",
    "check",
    "gallery",
    "h0",
    "h0_lattice",
    "index_of",
    "is_ample",
    "is_effective",
    "is_nef",
    "member_status",
    "pseudoindex_of",
]

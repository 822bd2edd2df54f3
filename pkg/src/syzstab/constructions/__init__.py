"""Explicit families of equal-degree monomials with (semi)stable syzygy bundles."""

from .dispatch import (
    ConstructionResult,
    admissible_n,
    construct_family,
    expected_verdict,
    hill_climb,
    interior_recursion,
)
from .line import p1_family
from .plane import p2_dispatch
from .space import boundary_plus_interior, faces_family, full_simplex, lift, pair_blocks

__all__ = [
    "ConstructionResult",
    "admissible_n",
    "boundary_plus_interior",
    "construct_family",
    "expected_verdict",
    "faces_family",
    "full_simplex",
    "hill_climb",
    "interior_recursion",
    "lift",
    "p1_family",
    "p2_dispatch",
    "pair_blocks",
]

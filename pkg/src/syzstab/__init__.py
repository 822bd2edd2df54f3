"""Stability of syzygy bundles of monomial families on projective space."""

from .constructions import (
    ConstructionResult,
    boundary_plus_interior,
    construct_family,
    faces_family,
    full_simplex,
    interior_recursion,
    lift,
    p1_family,
    p2_dispatch,
)
from .criterion import (
    Classification,
    SubsetWitness,
    Verdict,
    classify,
    classify_bruteforce,
    margin,
    saturate,
)
from .harness import CensusReport, SweepReport, census, sweep
from .moduli import ModuliReport, moduli_report, slope
from .monomials import (
    Family,
    Monomial,
    degree,
    divides,
    enumerate_monomials,
    gcd,
    gcd_all,
    gcd_closure,
    is_m_primary,
    render,
)

__version__ = "0.1.0"

__all__ = [
    "CensusReport",
    "Classification",
    "ConstructionResult",
    "Family",
    "ModuliReport",
    "Monomial",
    "SubsetWitness",
    "SweepReport",
    "Verdict",
    "boundary_plus_interior",
    "census",
    "classify",
    "classify_bruteforce",
    "construct_family",
    "degree",
    "divides",
    "enumerate_monomials",
    "faces_family",
    "full_simplex",
    "gcd",
    "gcd_all",
    "gcd_closure",
    "interior_recursion",
    "is_m_primary",
    "lift",
    "margin",
    "moduli_report",
    "p1_family",
    "p2_dispatch",
    "render",
    "saturate",
    "slope",
    "sweep",
]

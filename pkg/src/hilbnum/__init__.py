"""Hilbert series and Hilbert numerators of monomial ideals in x1, x2, x3, ..."""

from hilbnum.engine import (
    build_lcm_lattice,
    convergence_run,
    koszul_coefficient,
    numerator,
    numerator_incl_excl,
    numerator_koszul,
    numerator_lcm_lattice,
    numerator_oracle,
    truncation_law,
    verify_23gen_recursion,
)
from hilbnum.ideal import MonomialIdeal, minimalize, staircase_complement
from hilbnum.kernels import BACKEND
from hilbnum.monomial import ONE, ZERO, Monomial, Partition
from hilbnum.series import CollapsedSeries, GradedSeries, collapse, mu, nu

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CollapsedSeries",
    "GradedSeries",
    "Monomial",
    "MonomialIdeal",
    "ONE",
    "Partition",
    "ZERO",
    "build_lcm_lattice",
    "collapse",
    "convergence_run",
    "koszul_coefficient",
    "minimalize",
    "mu",
    "nu",
    "numerator",
    "numerator_incl_excl",
    "numerator_koszul",
    "numerator_lcm_lattice",
    "numerator_oracle",
    "staircase_complement",
    "truncation_law",
    "verify_23gen_recursion",
]

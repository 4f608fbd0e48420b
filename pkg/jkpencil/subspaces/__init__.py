"""
Subspace calculus for skew pencils.
"""

from jkpencil.subspaces.annihilators import AnnihilatorReport, annihilator_checks
from jkpencil.subspaces.calculus import (
    AdmissibilityReport,
    AdmissibilityWitness,
    complement_at,
    core_subspace,
    hamiltonian_preimage_span,
    is_admissible,
    is_bi_isotropic,
    is_bi_lagrangian,
    is_recursion_invariant,
    kernel_sum_subspace,
    mantle_subspace,
    regular_parameters,
    sample_parameters,
)
from jkpencil.subspaces.subspace import Subspace, intersect_all

__all__ = [
    "Subspace",
    "intersect_all",
    "AdmissibilityReport",
    "AdmissibilityWitness",
    "AnnihilatorReport",
    "complement_at",
    "core_subspace",
    "mantle_subspace",
    "is_bi_isotropic",
    "is_bi_lagrangian",
    "is_admissible",
    "is_recursion_invariant",
    "kernel_sum_subspace",
    "hamiltonian_preimage_span",
    "annihilator_checks",
    "regular_parameters",
    "sample_parameters",
]

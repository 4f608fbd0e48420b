"""
Polynomial Poisson pencils on coordinate space.
"""

from jkpencil.poisson.bivector import (
    DEFAULT_GUARDRAILS,
    Guardrails,
    PolyBivector,
    Trivector,
    is_compatible,
    is_poisson,
    schouten_bracket,
)
from jkpencil.poisson.checks import (
    BiHamiltonianReport,
    BiInvolutionReport,
    CompletenessReport,
    EigenDiffReport,
    StandardIntegralsReport,
    TwoBracketReport,
    bi_involution_check,
    bihamiltonian_check,
    check_eigendiff,
    completeness_check,
    map_points,
    standard_integrals_report,
    two_bracket_report,
)
from jkpencil.poisson.families import BiHamSystem, FunctionFamily, Member, Role
from jkpencil.poisson.pencil import (
    BracketValue,
    PolyPencil,
    ProbeResult,
    bracket_fn,
    casimir_shift,
    completeness_number,
    eval_at,
    hamiltonian_field,
    is_casimir,
    jk_regularity_probe,
    perturbation,
)

__all__ = [
    "Guardrails",
    "DEFAULT_GUARDRAILS",
    "PolyBivector",
    "Trivector",
    "schouten_bracket",
    "is_poisson",
    "is_compatible",
    "PolyPencil",
    "BracketValue",
    "ProbeResult",
    "bracket_fn",
    "hamiltonian_field",
    "is_casimir",
    "casimir_shift",
    "eval_at",
    "completeness_number",
    "perturbation",
    "jk_regularity_probe",
    "Role",
    "Member",
    "FunctionFamily",
    "BiHamSystem",
    "EigenDiffReport",
    "BiInvolutionReport",
    "CompletenessReport",
    "BiHamiltonianReport",
    "TwoBracketReport",
    "StandardIntegralsReport",
    "map_points",
    "check_eigendiff",
    "bi_involution_check",
    "completeness_check",
    "bihamiltonian_check",
    "two_bracket_report",
    "standard_integrals_report",
]

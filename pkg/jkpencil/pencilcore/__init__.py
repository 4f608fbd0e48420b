"""
Skew pencils and their Jordan-Kronecker invariants.
"""

from jkpencil.pencilcore.blocks import (
    build_jordan_block,
    build_kronecker_block,
    congruence_transform,
    direct_sum,
    rebase,
)
from jkpencil.pencilcore.invariants import (
    CharPoly,
    JKInvariants,
    char_poly,
    eigenvalue_set,
    is_eigenvalue,
    jk_invariants,
    jk_pattern,
    jordan_structure,
    kronecker_indices,
    make_invariants,
    pencil_rank,
    recursion_operator,
    regular_form,
)
from jkpencil.pencilcore.pencil import (
    INF,
    EigenKey,
    FactorClass,
    ProjParam,
    SkewPencil,
    eigen_sort_key,
    eigen_to_json,
    parse_param,
)

__all__ = [
    "SkewPencil",
    "ProjParam",
    "INF",
    "FactorClass",
    "EigenKey",
    "eigen_sort_key",
    "eigen_to_json",
    "parse_param",
    "CharPoly",
    "JKInvariants",
    "make_invariants",
    "pencil_rank",
    "char_poly",
    "eigenvalue_set",
    "is_eigenvalue",
    "jordan_structure",
    "kronecker_indices",
    "jk_invariants",
    "jk_pattern",
    "recursion_operator",
    "regular_form",
    "build_jordan_block",
    "build_kronecker_block",
    "direct_sum",
    "congruence_transform",
    "rebase",
]

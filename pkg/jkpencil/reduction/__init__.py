"""
Bi-Poisson reduction, bi-Lagrangian completion and the image obstruction.
"""

from jkpencil.reduction.completion import (
    CompletionStep,
    CompletionTrace,
    bilagrangian_completion,
    extension_step,
)
from jkpencil.reduction.heights import eigenvector_heights, nilpotent_part
from jkpencil.reduction.obstruction import ObstructionReport, SampleVerdict, in_image, obstruction_check
from jkpencil.reduction.reduce import ReducedPencil, bi_poisson_reduce, project_bilagrangian

__all__ = [
    "ReducedPencil",
    "bi_poisson_reduce",
    "project_bilagrangian",
    "eigenvector_heights",
    "nilpotent_part",
    "CompletionStep",
    "CompletionTrace",
    "extension_step",
    "bilagrangian_completion",
    "ObstructionReport",
    "SampleVerdict",
    "in_image",
    "obstruction_check",
]

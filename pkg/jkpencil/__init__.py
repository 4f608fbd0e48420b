"""
jkpencil - exact Jordan-Kronecker analysis of skew and Poisson pencils.
"""

from jkpencil.config.settings import Settings, load_settings
from jkpencil.errors import JKPencilError
from jkpencil.pencilcore import SkewPencil, jk_invariants
from jkpencil.subspaces import Subspace
from jkpencil.reduction import bi_poisson_reduce, bilagrangian_completion
from jkpencil.poisson import PolyBivector, PolyPencil

__version__ = "0.1.0"

__all__ = [
    "Settings",
    "load_settings",
    "JKPencilError",
    "SkewPencil",
    "jk_invariants",
    "Subspace",
    "bi_poisson_reduce",
    "bilagrangian_completion",
    "PolyBivector",
    "PolyPencil",
]

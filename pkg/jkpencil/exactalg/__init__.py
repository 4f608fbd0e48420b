"""
Exact arithmetic: rationals, polynomials, and fraction-free linear algebra.
"""

from jkpencil.exactalg.elimination import (
    determinant,
    inverse,
    kernel,
    kernel_of_rows,
    rank,
    rank_of_rows,
    rank_symbolic,
    rref,
    solve,
)
from jkpencil.exactalg.matrices import PolyMatrix, RatMatrix, Vector, as_vector, block_diagonal, dot
from jkpencil.exactalg.multipoly import MultiPoly
from jkpencil.exactalg.pfaffian import pfaffian
from jkpencil.exactalg.scalars import Rational, as_rational, format_rational, parse_rational
from jkpencil.exactalg.smith import smith_form
from jkpencil.exactalg.unipoly import (
    UniPoly,
    format_factored,
    irreducible_factors,
    rational_roots,
    squarefree_factor,
    uni_gcd,
)

__all__ = [
    "Rational",
    "parse_rational",
    "format_rational",
    "as_rational",
    "UniPoly",
    "MultiPoly",
    "RatMatrix",
    "PolyMatrix",
    "Vector",
    "as_vector",
    "dot",
    "block_diagonal",
    "pfaffian",
    "rank",
    "rank_of_rows",
    "rank_symbolic",
    "determinant",
    "inverse",
    "kernel",
    "kernel_of_rows",
    "rref",
    "solve",
    "smith_form",
    "uni_gcd",
    "squarefree_factor",
    "rational_roots",
    "irreducible_factors",
    "format_factored",
]

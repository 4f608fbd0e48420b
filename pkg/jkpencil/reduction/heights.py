"""
Eigenvectors of the recursion operator graded by chain height.
"""

import logging

from jkpencil.errors import PreconditionError, RationalEigenvalueRequired
from jkpencil.exactalg import RatMatrix, Vector, inverse, kernel
from jkpencil.pencilcore import EigenKey, FactorClass, SkewPencil, pencil_rank, regular_form
from jkpencil.subspaces import Subspace

logger = logging.getLogger(__name__)


def _column_space(m: RatMatrix) -> Subspace:
    return Subspace.span(m.rows, m.transpose().entries)


def nilpotent_part(pencil: SkewPencil, eig: EigenKey) -> RatMatrix:
    """R^{-1}(A - c*B) for a finite eigenvalue c, R^{-1}B at infinity, R a nondegenerate form."""
    if isinstance(eig, FactorClass):
        raise RationalEigenvalueRequired(f"eigenvector heights need a rational eigenvalue, got roots of {eig}")
    if pencil_rank(pencil) != pencil.n:
        raise PreconditionError("eigenvector heights need a nondegenerate pencil")
    _, form = regular_form(pencil)
    target = pencil.B if eig.is_infinite else pencil.shifted(eig.value)
    return inverse(form) @ target


def eigenvector_heights(pencil: SkewPencil, eig: EigenKey) -> list[tuple[Vector, int]]:
    """Kernel basis of the nilpotent part with heights, lowest height first.

    Height of v is the largest j with v in Im N^{j-1}. Within a height the
    vectors follow RREF pivot order.
    """
    n_op = nilpotent_part(pencil, eig)
    ker = Subspace(pencil.n, kernel(n_op))
    if ker.dim == 0:
        raise PreconditionError(f"{eig} is not an eigenvalue of the pencil")
    levels = [ker]
    power = RatMatrix.identity(pencil.n)
    while True:
        power = power @ n_op
        level = ker & _column_space(power)
        if level.dim == 0:
            break
        levels.append(level)
    chosen: list[tuple[Vector, int]] = []
    current = Subspace.zero(pencil.n)
    for height in range(len(levels), 0, -1):
        for v in levels[height - 1].basis:
            grown = current.extended([v])
            if grown.dim > current.dim:
                chosen.append((v, height))
                current = grown
    chosen.sort(key=lambda item: item[1])
    logger.debug("eigenvector heights at %s: %s", eig, [h for _, h in chosen])
    return chosen

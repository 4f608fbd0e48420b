"""
Linear bi-Poisson reduction: the pencil induced on U^perp / U.
"""

import logging
from dataclasses import dataclass
from typing import Sequence

from jkpencil.errors import InternalInconsistency, PreconditionError
from jkpencil.exactalg import RatMatrix, Vector, as_vector, solve
from jkpencil.pencilcore import (
    FactorClass,
    SkewPencil,
    eigenvalue_set,
    is_eigenvalue,
    pencil_rank,
)
from jkpencil.subspaces import (
    Subspace,
    core_subspace,
    is_admissible,
    is_bi_isotropic,
    is_bi_lagrangian,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReducedPencil:
    """Induced pencil on U^perp / U with the data to move vectors between the spaces.

    ``projection`` rows are a basis of U^perp: the basis of U first, then
    the representatives ``lift`` of the reduced basis vectors.
    """
    source: SkewPencil
    subspace: Subspace
    complement: Subspace
    reduced: SkewPencil
    lift: RatMatrix
    projection: RatMatrix

    def lift_vector(self, coordinates: Sequence) -> Vector:
        """Representative in U^perp of a vector of the reduced space."""
        y = as_vector(coordinates)
        if not self.lift.rows:
            return as_vector([0] * self.source.n)
        return self.lift.transpose().apply(y)

    def project_vector(self, vector: Sequence) -> Vector:
        """Class in U^perp / U of a vector of U^perp."""
        coordinates = solve(self.projection.transpose(), as_vector(vector))
        if coordinates is None:
            raise PreconditionError("vector is not in the complement U^perp")
        return coordinates[self.subspace.dim:]

    def to_json(self) -> dict:
        return {
            "reduced": self.reduced.to_json(),
            "subspace": self.subspace.to_json(),
            "complement": self.complement.to_json(),
            "lift": self.lift.to_strings(),
            "projection": self.projection.to_strings(),
        }


def _gram(rows: RatMatrix, form: RatMatrix) -> RatMatrix:
    return rows @ form @ rows.transpose()


def _check_spectrum(source: SkewPencil, reduced: SkewPencil, source_rank: int):
    if pencil_rank(reduced) != reduced.n:
        raise InternalInconsistency("reduced pencil is degenerate although U contains the core")
    source_spectrum = None
    for eig in eigenvalue_set(reduced):
        if isinstance(eig, FactorClass):
            if source_spectrum is None:
                source_spectrum = eigenvalue_set(source)
            ok = eig in source_spectrum
        else:
            ok = is_eigenvalue(source, eig, source_rank)
        if not ok:
            raise InternalInconsistency(f"reduced eigenvalue {eig} is not an eigenvalue of the source pencil")


def bi_poisson_reduce(pencil: SkewPencil, u: Subspace) -> ReducedPencil:
    """Reduce by an admissible bi-isotropic subspace U."""
    if not is_bi_isotropic(pencil, u):
        raise PreconditionError("reduction needs a bi-isotropic subspace")
    report = is_admissible(pencil, u)
    if not report.admissible:
        raise PreconditionError(
            f"reduction needs an admissible subspace: complements differ at {report.witness.first} "
            f"and {report.witness.second}")
    complement = report.common_complement
    if not u <= complement:
        raise InternalInconsistency("bi-isotropic subspace is not inside its complement")

    current = u
    extension = []
    for v in complement.basis:
        grown = current.extended([v])
        if grown.dim > current.dim:
            extension.append(v)
            current = grown
    n = pencil.n
    lift = RatMatrix(len(extension), n, tuple(extension))
    projection = RatMatrix(u.dim + len(extension), n, u.basis + tuple(extension))

    if u.dim:
        for name, form in (("A", pencil.A), ("B", pencil.B)):
            if not (u.matrix() @ form @ complement.matrix().transpose()).is_zero():
                raise InternalInconsistency(f"induced form {name} is not well defined on U^perp/U")

    reduced = SkewPencil(_gram(lift, pencil.A), _gram(lift, pencil.B))
    if core_subspace(pencil) <= u:
        _check_spectrum(pencil, reduced, pencil_rank(pencil))
    logger.debug("reduced %d-dim pencil by a %d-dim subspace to dimension %d", n, u.dim, reduced.n)
    return ReducedPencil(
        source=pencil,
        subspace=u,
        complement=complement,
        reduced=reduced,
        lift=lift,
        projection=projection,
    )


def project_bilagrangian(reduction: ReducedPencil, lagrangian: Subspace) -> Subspace:
    """((L cap U^perp) + U) / U as a subspace of the reduced space."""
    source = reduction.source
    if not is_bi_isotropic(source, lagrangian):
        raise PreconditionError("projection needs a bi-isotropic subspace")
    meet = (lagrangian & reduction.complement) + reduction.subspace
    image = Subspace.span(reduction.reduced.n, (reduction.project_vector(v) for v in meet.basis))
    if not is_bi_isotropic(reduction.reduced, image):
        raise InternalInconsistency("projected subspace is not bi-isotropic")
    if is_bi_lagrangian(source, lagrangian) and not is_bi_lagrangian(reduction.reduced, image):
        raise InternalInconsistency("projection of a bi-Lagrangian subspace is not bi-Lagrangian")
    return image

"""
Completion of admissible bi-isotropic subspaces to bi-Lagrangian ones by
repeated reduction and extension.
"""

import logging
from dataclasses import dataclass, field

from jkpencil.errors import InternalInconsistency, PreconditionError, RationalEigenvalueRequired
from jkpencil.exactalg import Vector, format_rational
from jkpencil.pencilcore import FactorClass, ProjParam, SkewPencil, eigen_sort_key, eigenvalue_set
from jkpencil.reduction.heights import eigenvector_heights
from jkpencil.reduction.reduce import bi_poisson_reduce
from jkpencil.subspaces import Subspace, core_subspace, is_admissible, is_bi_isotropic, is_bi_lagrangian

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CompletionStep:
    eigenvalue: ProjParam
    height: int
    vector: Vector
    reduced_dim: int

    def to_json(self) -> dict:
        return {
            "eigenvalue": str(self.eigenvalue),
            "height": self.height,
            "vector": [format_rational(a) for a in self.vector],
            "reduced_dim": self.reduced_dim,
        }


@dataclass(frozen=True)
class CompletionTrace:
    start: Subspace
    result: Subspace
    steps: tuple[CompletionStep, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "start": self.start.to_json(),
            "steps": [s.to_json() for s in self.steps],
            "result": self.result.to_json(),
            "dim": self.result.dim,
        }


def extension_step(pencil: SkewPencil, current: Subspace) -> CompletionStep | None:
    """One reduce-and-extend step; None when the reduced space is already zero."""
    reduction = bi_poisson_reduce(pencil, current)
    reduced = reduction.reduced
    if reduced.n == 0:
        return None
    spectrum = eigenvalue_set(reduced)
    irrational = [e for e in spectrum if isinstance(e, FactorClass)]
    if irrational:
        raise RationalEigenvalueRequired(f"reduced pencil has non-rational eigenvalues: roots of {irrational[0]}")
    eig = min(spectrum, key=eigen_sort_key)
    vector, height = eigenvector_heights(reduced, eig)[0]
    lifted = reduction.lift_vector(vector)
    logger.debug("extension at eigenvalue %s, height %d, reduced dim %d", eig, height, reduced.n)
    return CompletionStep(eigenvalue=eig, height=height, vector=lifted, reduced_dim=reduced.n)


def bilagrangian_completion(pencil: SkewPencil, start: Subspace) -> CompletionTrace:
    """Extend ``start`` (bi-isotropic, admissible, containing the core) to a bi-Lagrangian subspace."""
    if not is_bi_isotropic(pencil, start):
        raise PreconditionError("completion needs a bi-isotropic starting subspace")
    if not is_admissible(pencil, start).admissible:
        raise PreconditionError("completion needs an admissible starting subspace")
    if not core_subspace(pencil) <= start:
        raise PreconditionError("completion needs a starting subspace containing the core")

    current = start
    steps: list[CompletionStep] = []
    for _ in range(pencil.n + 1):
        step = extension_step(pencil, current)
        if step is None:
            break
        if steps and step.reduced_dim != steps[-1].reduced_dim - 2:
            raise InternalInconsistency(
                f"reduced dimension went from {steps[-1].reduced_dim} to {step.reduced_dim}")
        steps.append(step)
        current = current.extended([step.vector])
    else:
        raise InternalInconsistency("completion did not terminate")

    if not is_bi_lagrangian(pencil, current):
        raise InternalInconsistency("completion result is not bi-Lagrangian")
    if not start <= current:
        raise InternalInconsistency("completion result does not contain the starting subspace")
    return CompletionTrace(start=start, result=current, steps=tuple(steps))

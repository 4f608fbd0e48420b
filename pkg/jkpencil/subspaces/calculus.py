"""
Subspace calculus for a fixed pencil: skew-orthogonal complements, core,
mantle, isotropy predicates and admissibility.
"""

import logging
from dataclasses import dataclass
from typing import Iterator, Sequence

from jkpencil.errors import InternalInconsistency, PreconditionError, StructuralError
from jkpencil.exactalg import PolyMatrix, RatMatrix, as_vector, kernel, rank, rank_symbolic, solve
from jkpencil.pencilcore import INF, ProjParam, SkewPencil, pencil_rank, recursion_operator
from jkpencil.subspaces.subspace import Subspace, intersect_all

logger = logging.getLogger(__name__)


def regular_parameters(pencil: SkewPencil, pencil_rank_: int | None = None) -> Iterator[ProjParam]:
    """Finite regular parameters 0, 1, 2, ... in order, skipping rank drops."""
    r = pencil_rank(pencil) if pencil_rank_ is None else pencil_rank_
    t = 0
    while True:
        if rank(pencil.at(t)) == r:
            yield ProjParam.finite(t)
        t += 1


def sample_parameters(pencil: SkewPencil, count: int, pencil_rank_: int | None = None) -> list[ProjParam]:
    """``count`` finite regular parameters, followed by infinity when it is regular."""
    r = pencil_rank(pencil) if pencil_rank_ is None else pencil_rank_
    finite = regular_parameters(pencil, r)
    params = [next(finite) for _ in range(count)]
    if rank(pencil.B) == r:
        params.append(INF)
    return params


def _check_ambient(pencil: SkewPencil, u: Subspace):
    if u.ambient != pencil.n:
        raise StructuralError(f"subspace lives in dimension {u.ambient}, pencil in {pencil.n}")


def complement_at(pencil: SkewPencil, u: Subspace, param: ProjParam) -> Subspace:
    """U^{perp} with respect to A_param: null space of U_basis . A_param."""
    _check_ambient(pencil, u)
    if u.dim == 0:
        return Subspace.whole(pencil.n)
    return Subspace(pencil.n, kernel(u.matrix() @ pencil.at(param)))


def core_subspace(pencil: SkewPencil) -> Subspace:
    """Sum of the kernels of the regular forms."""
    n = pencil.n
    r = pencil_rank(pencil)
    params = sample_parameters(pencil, n + 1, r)
    core = Subspace.zero(n)
    for param in params:
        core = core.extended(kernel(pencil.at(param)))
    extra = next(p for p in regular_parameters(pencil, r) if p not in params)
    if core.extended(kernel(pencil.at(extra))) != core:
        raise InternalInconsistency(f"core did not stabilize after {len(params)} samples")
    logger.debug("core of dimension %d from %d samples", core.dim, len(params))
    return core


def mantle_subspace(pencil: SkewPencil) -> Subspace:
    """Skew-orthogonal complement of the core with respect to a regular form."""
    core = core_subspace(pencil)
    finite = regular_parameters(pencil)
    complements = [complement_at(pencil, core, next(finite)) for _ in range(3)]
    if any(c != complements[0] for c in complements[1:]):
        raise InternalInconsistency("mantle depends on the choice of regular form")
    return complements[0]


def is_bi_isotropic(pencil: SkewPencil, u: Subspace) -> bool:
    _check_ambient(pencil, u)
    if u.dim == 0:
        return True
    m = u.matrix()
    mt = m.transpose()
    return (m @ pencil.A @ mt).is_zero() and (m @ pencil.B @ mt).is_zero()


def is_bi_lagrangian(pencil: SkewPencil, u: Subspace) -> bool:
    return is_bi_isotropic(pencil, u) and u.dim == pencil.n - pencil_rank(pencil) // 2


@dataclass(frozen=True)
class AdmissibilityWitness:
    """Two sampled parameters whose complements differ."""
    first: ProjParam
    second: ProjParam
    first_complement: Subspace
    second_complement: Subspace

    def to_json(self) -> dict:
        return {
            "first": str(self.first),
            "second": str(self.second),
            "first_complement": self.first_complement.to_json(),
            "second_complement": self.second_complement.to_json(),
        }


@dataclass(frozen=True)
class AdmissibilityReport:
    admissible: bool
    generic_dim: int
    sampled: tuple[ProjParam, ...]
    common_complement: Subspace | None = None
    witness: AdmissibilityWitness | None = None

    def to_json(self) -> dict:
        return {
            "admissible": self.admissible,
            "generic_complement_dim": self.generic_dim,
            "sampled": [str(p) for p in self.sampled],
            "common_complement": self.common_complement.to_json() if self.common_complement else None,
            "witness": self.witness.to_json() if self.witness else None,
        }


def is_recursion_invariant(pencil: SkewPencil, u: Subspace) -> bool:
    """Invariance of U under the recursion operator (nondegenerate pencils only)."""
    _check_ambient(pencil, u)
    operator = recursion_operator(pencil)
    return all(u.contains(operator.apply(v)) for v in u.basis)


def is_admissible(pencil: SkewPencil, u: Subspace) -> AdmissibilityReport:
    """Admissible when the complements coincide for almost all forms of the pencil."""
    _check_ambient(pencil, u)
    n = pencil.n
    r = pencil_rank(pencil)
    if u.dim == 0:
        generic = n
    else:
        m = u.matrix()
        generic = n - rank_symbolic(PolyMatrix.linear(m @ pencil.A, m @ pencil.B))
    params = sample_parameters(pencil, n + 1, r)
    complements = [complement_at(pencil, u, p) for p in params]
    common = intersect_all(complements, n)
    admissible = common.dim == generic
    witness = None
    if not admissible:
        index = next((i for i, c in enumerate(complements) if c != complements[0]), None)
        if index is None:
            raise InternalInconsistency("sampled complements agree but miss the generic dimension")
        witness = AdmissibilityWitness(params[0], params[index], complements[0], complements[index])
    if r == n and rank(pencil.B) == n:
        if is_recursion_invariant(pencil, u) != admissible:
            raise InternalInconsistency("admissibility disagrees with recursion-operator invariance")
    logger.debug("admissibility of a %d-dim subspace: %s", u.dim, admissible)
    return AdmissibilityReport(
        admissible=admissible,
        generic_dim=generic,
        sampled=tuple(params),
        common_complement=common if admissible else None,
        witness=witness,
    )


def kernel_sum_subspace(pencil: SkewPencil, pairs: Sequence[tuple[ProjParam, Sequence]]) -> Subspace:
    """K + span{v_i} for kernel vectors v_i of A + mu_i B at distinct mu_i."""
    n = pencil.n
    seen = set()
    vectors = []
    for index, (mu, vector) in enumerate(pairs):
        if mu in seen:
            raise PreconditionError(f"parameter {mu} repeated at pair {index}")
        seen.add(mu)
        v = as_vector(vector)
        if len(v) != n:
            raise StructuralError(f"pair {index}: vector of length {len(v)}, expected {n}")
        if any(pencil.at(mu).apply(v)):
            raise PreconditionError(f"pair {index}: vector is not in Ker(A_{mu})")
        vectors.append(v)
    result = core_subspace(pencil).extended(vectors)
    if not is_bi_isotropic(pencil, result):
        raise InternalInconsistency("kernel-sum subspace is not bi-isotropic")
    if not is_admissible(pencil, result).admissible:
        raise InternalInconsistency("kernel-sum subspace is not admissible")
    return result


def hamiltonian_preimage_span(pencil: SkewPencil, beta: Sequence, samples: int | None = None) -> Subspace:
    """K + span{v_l : A_l v_l = beta} over regular parameters, until the span stabilizes."""
    n = pencil.n
    b = as_vector(beta)
    if len(b) != n:
        raise StructuralError(f"covector of length {len(b)}, expected {n}")
    r = pencil_rank(pencil)
    count = n + 1 if samples is None else samples
    result = core_subspace(pencil)

    def adjoin(param: ProjParam) -> bool:
        nonlocal result
        solution = solve(pencil.at(param), b)
        if solution is None:
            raise PreconditionError(f"covector is outside Im A_l at l = {param}")
        grown = result.extended([solution])
        changed = grown != result
        result = grown
        return changed

    for param in sample_parameters(pencil, count, r):
        adjoin(param)
    finite = regular_parameters(pencil, r)
    for _ in range(count):
        next(finite)
    for _ in range(n + 1):
        if not adjoin(next(finite)):
            break
    if not is_admissible(pencil, result).admissible:
        raise InternalInconsistency("Hamiltonian preimage span is not admissible")
    return result

"""
Image condition v in Im A_l for all l: a necessary condition for a vector to
be Hamiltonian with respect to every form of the pencil.
"""

from dataclasses import dataclass, field
from typing import Sequence

from jkpencil.errors import StructuralError
from jkpencil.exactalg import PolyMatrix, RatMatrix, UniPoly, Vector, as_vector, format_rational, rank, rank_symbolic
from jkpencil.pencilcore import INF, ProjParam, SkewPencil, pencil_rank
from jkpencil.subspaces import sample_parameters

DIAGNOSTIC_PARAMETERS = (ProjParam.finite(0), ProjParam.finite(1), ProjParam.finite(2), INF)


@dataclass(frozen=True)
class SampleVerdict:
    param: ProjParam
    in_image: bool
    regular: bool

    def to_json(self) -> dict:
        return {"lambda": str(self.param), "in_image": self.in_image, "regular": self.regular}


@dataclass(frozen=True)
class ObstructionReport:
    vector: Vector
    passed: bool
    samples: tuple[SampleVerdict, ...] = field(default=())
    regular_consensus: bool = True

    def to_json(self) -> dict:
        return {
            "vector": [format_rational(a) for a in self.vector],
            "passed": self.passed,
            "verdict": "PASS" if self.passed else "FAIL",
            "samples": [s.to_json() for s in self.samples],
            "regular_consensus": self.regular_consensus,
        }


def in_image(form: RatMatrix, v: Vector) -> bool:
    column = RatMatrix(len(v), 1, tuple((a,) for a in v))
    return rank(form.hstack(column)) == rank(form)


def obstruction_check(
    pencil: SkewPencil,
    vector: Sequence,
    params: Sequence[ProjParam] = DIAGNOSTIC_PARAMETERS,
) -> ObstructionReport:
    """Compare the rank of [A + l*B | v] with that of A + l*B over QQ(l)."""
    n = pencil.n
    v = as_vector(vector)
    if len(v) != n:
        raise StructuralError(f"vector of length {len(v)}, expected {n}")
    matrix = pencil.poly_matrix()
    augmented = PolyMatrix(n, n + 1, tuple(row + (UniPoly.constant(a),) for row, a in zip(matrix.entries, v)))
    r = pencil_rank(pencil)
    passed = rank_symbolic(augmented) == r

    samples = tuple(
        SampleVerdict(param=p, in_image=in_image(pencil.at(p), v), regular=rank(pencil.at(p)) == r)
        for p in params
    )
    consensus = all(in_image(pencil.at(p), v) for p in sample_parameters(pencil, n + 1, r))
    return ObstructionReport(vector=v, passed=passed, samples=samples, regular_consensus=consensus)

"""
Compatible pairs of polynomial Poisson bivectors and their fibrewise pencils.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from jkpencil.errors import InternalInconsistency, PreconditionError, StructuralError
from jkpencil.exactalg import MultiPoly, as_rational
from jkpencil.pencilcore import ProjParam, SkewPencil, jk_invariants, jk_pattern, pencil_rank
from jkpencil.poisson.bivector import (
    DEFAULT_GUARDRAILS,
    Guardrails,
    PolyBivector,
    is_compatible,
    is_poisson,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PolyPencil:
    """Poisson bivectors A and B with a stored compatibility certificate."""
    A: PolyBivector
    B: PolyBivector
    verified: bool = False

    @classmethod
    def build(cls, a: PolyBivector, b: PolyBivector, guardrails: Guardrails = DEFAULT_GUARDRAILS) -> "PolyPencil":
        if a.n != b.n:
            raise StructuralError(f"brackets on different spaces: {a.n} vs {b.n}")
        if not is_poisson(a, guardrails):
            raise PreconditionError("bracket A violates the Jacobi identity")
        if not is_poisson(b, guardrails):
            raise PreconditionError("bracket B violates the Jacobi identity")
        if not is_compatible(a, b, guardrails):
            raise PreconditionError("brackets A and B are not compatible")
        return cls(a, b, verified=True)

    @property
    def n(self) -> int:
        return self.A.n

    def form(self, param: ProjParam) -> PolyBivector:
        """A + l*B, or B at infinity."""
        if param.is_infinite:
            return self.B
        return self.A + self.B.scale(MultiPoly.constant(self.n, param.value))


@dataclass(frozen=True)
class BracketValue:
    """{f, g}_l = {f, g}_A + l {f, g}_B."""
    a_part: MultiPoly
    b_part: MultiPoly

    def at(self, param: ProjParam) -> MultiPoly:
        if param.is_infinite:
            return self.b_part
        return self.a_part + self.b_part * MultiPoly.constant(self.a_part.n, param.value)

    @property
    def is_zero(self) -> bool:
        return self.a_part.is_zero and self.b_part.is_zero


def _bracket(p: PolyBivector, f: MultiPoly, g: MultiPoly) -> MultiPoly:
    df, dg = f.gradient(), g.gradient()
    pdg = p.apply(dg)
    total = MultiPoly.zero(p.n)
    for a, b in zip(df, pdg):
        if not a.is_zero and not b.is_zero:
            total = total + a * b
    return total


def bracket_fn(pencil: PolyPencil, f: MultiPoly, g: MultiPoly, param: ProjParam | None = None):
    """df^T (A + l B) dg at a parameter, or both coefficients when param is None."""
    if param is not None:
        return _bracket(pencil.form(param), f, g)
    return BracketValue(_bracket(pencil.A, f, g), _bracket(pencil.B, f, g))


def hamiltonian_field(pencil: PolyPencil, f: MultiPoly, param: ProjParam) -> tuple[MultiPoly, ...]:
    """A_l df."""
    return pencil.form(param).apply(f.gradient())


def is_casimir(pencil: PolyPencil, f: MultiPoly, param: ProjParam) -> bool:
    return all(c.is_zero for c in hamiltonian_field(pencil, f, param))


def casimir_shift(pencil: PolyPencil, f: MultiPoly, guardrails: Guardrails = DEFAULT_GUARDRAILS) -> PolyBivector:
    """A + f*B for a common Casimir f of A and B."""
    if not is_casimir(pencil, f, ProjParam.finite(0)):
        raise PreconditionError(f"{f} is not a Casimir of bracket A")
    if not is_casimir(pencil, f, ProjParam.infinity()):
        raise PreconditionError(f"{f} is not a Casimir of bracket B")
    shifted = pencil.A + pencil.B.scale(f)
    ok = is_poisson(shifted, guardrails) and is_compatible(shifted, pencil.A, guardrails) \
        and is_compatible(shifted, pencil.B, guardrails)
    if not ok:
        raise InternalInconsistency("Casimir-shifted bracket is not Poisson or not compatible")
    return shifted


def eval_at(pencil: PolyPencil, point: Sequence) -> SkewPencil:
    if len(point) != pencil.n:
        raise StructuralError(f"point has {len(point)} coordinates, expected {pencil.n}")
    return SkewPencil(pencil.A.matrix_at(point), pencil.B.matrix_at(point))


def completeness_number(pencil: PolyPencil, point: Sequence) -> int:
    """N = n - rk P(x) / 2."""
    return pencil.n - pencil_rank(eval_at(pencil, point)) // 2


def perturbation(n: int, index: int) -> tuple[Fraction, ...]:
    """Fixed small rational offset number ``index`` (1-based)."""
    return tuple(Fraction((-1) ** (i + index) * (i + index), 1000 + 7 * index) for i in range(1, n + 1))


@dataclass(frozen=True)
class ProbeResult:
    point: tuple[Fraction, ...]
    pattern: tuple
    stable: bool
    unstable_offsets: tuple[int, ...] = field(default=())

    def to_json(self) -> dict:
        return {"probe_passed": self.stable, "unstable_offsets": list(self.unstable_offsets)}


def jk_regularity_probe(pencil: PolyPencil, point: Sequence, perturbations: int = 6) -> ProbeResult:
    """Compare the JK pattern at the point with the pattern at fixed nearby points.

    A passing probe supports, but does not certify, JK-regularity.
    """
    x = tuple(as_rational(v) for v in point)
    base = jk_pattern(jk_invariants(eval_at(pencil, x)))
    unstable = []
    for k in range(1, perturbations + 1):
        nearby = tuple(a + d for a, d in zip(x, perturbation(pencil.n, k)))
        if jk_pattern(jk_invariants(eval_at(pencil, nearby))) != base:
            unstable.append(k)
    if unstable:
        logger.warning("point %s failed the JK-regularity probe at offsets %s", [str(a) for a in x], unstable)
    return ProbeResult(point=x, pattern=base, stable=not unstable, unstable_offsets=tuple(unstable))

"""
Function families with roles, and bi-Hamiltonian vector fields.
"""

from dataclasses import dataclass, field
from typing import Literal, Sequence

from jkpencil.errors import PreconditionError, StructuralError
from jkpencil.exactalg import MultiPoly
from jkpencil.pencilcore import ProjParam
from jkpencil.poisson.pencil import PolyPencil, hamiltonian_field

RoleKind = Literal["casimir", "eigenvalue", "hamiltonian", "extension"]


@dataclass(frozen=True)
class Role:
    kind: RoleKind
    param: ProjParam | None = None

    def __post_init__(self):
        if self.kind in ("casimir", "hamiltonian") and self.param is None:
            raise StructuralError(f"role {self.kind} needs a parameter")

    def __str__(self) -> str:
        return self.kind if self.param is None else f"{self.kind}({self.param})"


@dataclass(frozen=True)
class Member:
    name: str
    function: MultiPoly
    role: Role = field(default_factory=lambda: Role("extension"))


@dataclass(frozen=True)
class FunctionFamily:
    n: int
    members: tuple[Member, ...] = ()

    def __post_init__(self):
        for m in self.members:
            if m.function.n != self.n:
                raise StructuralError(f"member {m.name} lives in dimension {m.function.n}, family in {self.n}")

    @classmethod
    def of(cls, n: int, functions: Sequence[tuple[str, MultiPoly, Role]]) -> "FunctionFamily":
        return cls(n, tuple(Member(name, f, role) for name, f, role in functions))

    @property
    def functions(self) -> tuple[MultiPoly, ...]:
        return tuple(m.function for m in self.members)

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class BiHamSystem:
    """A vector field v with Hamiltonians v = A_a dH_a, validated at construction."""
    v: tuple[MultiPoly, ...]
    hamiltonians: tuple[tuple[ProjParam, MultiPoly], ...] = ()

    @classmethod
    def build(
        cls,
        pencil: PolyPencil,
        v: Sequence[MultiPoly],
        hamiltonians: Sequence[tuple[ProjParam, MultiPoly]] = (),
    ) -> "BiHamSystem":
        if len(v) != pencil.n:
            raise StructuralError(f"vector field has {len(v)} components, expected {pencil.n}")
        for alpha, h in hamiltonians:
            field_ = hamiltonian_field(pencil, h, alpha)
            if any(not (a - b).is_zero for a, b in zip(field_, v)):
                raise PreconditionError(f"stored Hamiltonian {h} at alpha={alpha} does not generate v")
        return cls(tuple(v), tuple(hamiltonians))

    def apply(self, f: MultiPoly) -> MultiPoly:
        """v(f) = sum v^i d_i f."""
        total = MultiPoly.zero(f.n)
        for vi, dfi in zip(self.v, f.gradient()):
            if not vi.is_zero and not dfi.is_zero:
                total = total + vi * dfi
        return total

    def at(self, point) -> tuple:
        return tuple(c.evaluate(point) for c in self.v)

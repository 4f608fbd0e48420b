"""
Subspaces of QQ^n in canonical RREF form.
"""

from dataclasses import dataclass
from typing import Iterable, Sequence

from jkpencil.errors import StructuralError
from jkpencil.exactalg import RatMatrix, Vector, as_vector, format_rational, kernel_of_rows, rref


@dataclass(frozen=True)
class Subspace:
    """Row space of ``basis``; the basis is reduced row echelon so equality is structural."""
    ambient: int
    basis: tuple[Vector, ...]

    @classmethod
    def span(cls, ambient: int, vectors: Iterable[Sequence]) -> "Subspace":
        rows = [as_vector(v) for v in vectors]
        for v in rows:
            if len(v) != ambient:
                raise StructuralError(f"vector of length {len(v)} in a {ambient}-dimensional space")
        return cls(ambient, rref(rows, ambient)[0])

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        return cls(ambient, ())

    @classmethod
    def whole(cls, ambient: int) -> "Subspace":
        return cls.span(ambient, RatMatrix.identity(ambient).entries)

    @classmethod
    def coordinate(cls, ambient: int, indices: Iterable[int]) -> "Subspace":
        """Span of the standard vectors e_i (0-based indices)."""
        eye = RatMatrix.identity(ambient)
        return cls.span(ambient, (eye.row(i) for i in indices))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def matrix(self) -> RatMatrix:
        return RatMatrix(self.dim, self.ambient, self.basis)

    def _check_ambient(self, other: "Subspace"):
        if self.ambient != other.ambient:
            raise StructuralError(f"subspaces of different spaces: {self.ambient} vs {other.ambient}")

    def contains(self, vector: Sequence) -> bool:
        v = as_vector(vector)
        return Subspace.span(self.ambient, self.basis + (v,)).dim == self.dim

    def __le__(self, other: "Subspace") -> bool:
        self._check_ambient(other)
        return (self + other).dim == other.dim

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        return Subspace.span(self.ambient, self.basis + other.basis)

    def annihilator(self) -> "Subspace":
        """Vectors x with u . x = 0 for every u in the subspace."""
        return Subspace(self.ambient, kernel_of_rows(self.basis, self.ambient))

    def __and__(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        return (self.annihilator() + other.annihilator()).annihilator()

    def extended(self, vectors: Iterable[Sequence]) -> "Subspace":
        return Subspace.span(self.ambient, self.basis + tuple(as_vector(v) for v in vectors))

    def to_json(self) -> dict:
        return {"ambient": self.ambient, "basis": [[format_rational(a) for a in v] for v in self.basis]}


def intersect_all(spaces: Sequence[Subspace], ambient: int) -> Subspace:
    result = Subspace.whole(ambient)
    for s in spaces:
        result = result & s
    return result

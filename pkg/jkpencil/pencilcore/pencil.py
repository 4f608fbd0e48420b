"""
Skew-symmetric pencils A + l*B and projective parameter values.

Sign convention: c is an eigenvalue when rank(A - c*B) < rk P, so the
pencil A + l*B degenerates at the parameter l = -c.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from jkpencil.errors import InputError, StructuralError
from jkpencil.exactalg import PolyMatrix, RatMatrix, UniPoly, as_rational, format_rational, parse_rational


@dataclass(frozen=True)
class ProjParam:
    """A point of the projective line: a rational, or infinity (value None)."""
    value: Fraction | None = None

    @classmethod
    def finite(cls, value) -> "ProjParam":
        return cls(as_rational(value))

    @classmethod
    def infinity(cls) -> "ProjParam":
        return cls(None)

    @classmethod
    def parse(cls, text: str) -> "ProjParam":
        if text.strip().lower() in ("inf", "infinity", "oo"):
            return INF
        return cls(parse_rational(text))

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def negated(self) -> "ProjParam":
        return self if self.is_infinite else ProjParam(-self.value)

    def sort_key(self) -> tuple:
        return (1, Fraction(0)) if self.is_infinite else (0, self.value)

    def __str__(self) -> str:
        return "inf" if self.is_infinite else format_rational(self.value)


INF = ProjParam(None)


@dataclass(frozen=True)
class FactorClass:
    """Conjugate eigenvalues given as roots of an irreducible polynomial (degree >= 2)."""
    poly: UniPoly

    def __str__(self) -> str:
        return str(self.poly).replace(" ", "")


EigenKey = Union[ProjParam, FactorClass]


def eigen_sort_key(eig: EigenKey) -> tuple:
    """Rationals ascending, then factor classes, then infinity."""
    if isinstance(eig, FactorClass):
        return (1, eig.poly.degree, str(eig))
    if eig.is_infinite:
        return (2, 0, "")
    return (0, eig.value, "")


def eigen_to_json(eig: EigenKey) -> str | dict:
    if isinstance(eig, FactorClass):
        return {"factor": str(eig)}
    return str(eig)


@dataclass(frozen=True)
class SkewPencil:
    """A pair of n x n skew-symmetric rational matrices."""
    A: RatMatrix
    B: RatMatrix

    def __post_init__(self):
        for name, m in (("A", self.A), ("B", self.B)):
            if not m.is_square:
                raise StructuralError(f"pencil form {name} is not square: {m.rows}x{m.cols}")
            if not m.is_skew():
                raise StructuralError(f"pencil form {name} is not skew-symmetric")
        if self.A.rows != self.B.rows:
            raise StructuralError(f"pencil forms differ in size: {self.A.rows} vs {self.B.rows}")

    @classmethod
    def from_rows(cls, a: Iterable[Iterable], b: Iterable[Iterable]) -> "SkewPencil":
        ma = RatMatrix.from_rows(a)
        mb = RatMatrix.from_rows(b)
        return cls(ma, mb)

    @classmethod
    def zero(cls, n: int) -> "SkewPencil":
        return cls(RatMatrix.zeros(n), RatMatrix.zeros(n))

    @property
    def n(self) -> int:
        return self.A.rows

    def at(self, param: ProjParam | int | Fraction) -> RatMatrix:
        """A_l = A + l*B for finite l, B at infinity."""
        if not isinstance(param, ProjParam):
            param = ProjParam.finite(param)
        if param.is_infinite:
            return self.B
        return self.A + self.B.scale(param.value)

    def shifted(self, eigenvalue: Fraction) -> RatMatrix:
        """A - c*B, the form that drops rank at the eigenvalue c."""
        return self.A - self.B.scale(eigenvalue)

    def poly_matrix(self) -> PolyMatrix:
        return PolyMatrix.linear(self.A, self.B)

    def reversed(self) -> "SkewPencil":
        """The pencil (B, A); its parameter 0 is the infinity of the original."""
        return SkewPencil(self.B, self.A)

    def to_json(self) -> dict:
        return {"n": self.n, "A": self.A.to_strings(), "B": self.B.to_strings()}


def parse_param(value) -> ProjParam:
    if isinstance(value, ProjParam):
        return value
    if isinstance(value, str):
        return ProjParam.parse(value)
    try:
        return ProjParam.finite(value)
    except InputError:
        raise InputError(f"not a parameter value: {value!r}") from None

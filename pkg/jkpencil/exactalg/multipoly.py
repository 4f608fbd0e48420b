"""
Multivariate polynomials over the rationals in coordinates ``x1..xn``.
"""

import re
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

import sympy
from sympy.polys.polyerrors import BasePolynomialError

from jkpencil.errors import InputError, StructuralError
from jkpencil.exactalg.scalars import as_rational, from_sympy, to_sympy
from jkpencil.exactalg.unipoly import parse_polynomial_expr

_MULTI_TEXT_RE = re.compile(r"^[\sx0-9+\-*/^()]+$")


@lru_cache(maxsize=None)
def coordinate_symbols(n: int) -> tuple[sympy.Symbol, ...]:
    return tuple(sympy.Symbol(f"x{i}") for i in range(1, n + 1))


class MultiPoly:
    """Polynomial in ``x1..xn`` with rational coefficients.

    Terms are kept by sympy in graded lexicographic order, so two MultiPoly
    values are equal exactly when their term maps agree.
    """

    __slots__ = ("_poly", "_n")

    def __init__(self, poly: sympy.Poly, n: int):
        if n < 1:
            raise StructuralError(f"MultiPoly needs at least one coordinate, got n={n}")
        gens = coordinate_symbols(n)
        if poly.gens != gens or not poly.get_domain().is_QQ:
            poly = sympy.Poly(poly.as_expr(), *gens, domain=sympy.QQ)
        self._poly = poly
        self._n = n

    @classmethod
    def zero(cls, n: int) -> "MultiPoly":
        return cls(sympy.Poly(0, *coordinate_symbols(n), domain=sympy.QQ), n)

    @classmethod
    def constant(cls, n: int, value) -> "MultiPoly":
        return cls(sympy.Poly(to_sympy(as_rational(value)), *coordinate_symbols(n), domain=sympy.QQ), n)

    @classmethod
    def variable(cls, n: int, index: int) -> "MultiPoly":
        """The coordinate function x_{index+1} (index is 0-based)."""
        if not 0 <= index < n:
            raise StructuralError(f"coordinate index {index} out of range for n={n}")
        gens = coordinate_symbols(n)
        return cls(sympy.Poly(gens[index], *gens, domain=sympy.QQ), n)

    @classmethod
    def linear(cls, coefficients: Sequence) -> "MultiPoly":
        """The linear form sum c_i x_i."""
        n = len(coefficients)
        gens = coordinate_symbols(n)
        expr = sum((to_sympy(as_rational(c)) * g for c, g in zip(coefficients, gens)), sympy.Integer(0))
        return cls(sympy.Poly(expr, *gens, domain=sympy.QQ), n)

    @classmethod
    def from_terms(cls, n: int, terms: Mapping[tuple[int, ...], object]) -> "MultiPoly":
        gens = coordinate_symbols(n)
        data = {tuple(k): to_sympy(as_rational(v)) for k, v in terms.items() if as_rational(v) != 0}
        if not data:
            return cls.zero(n)
        return cls(sympy.Poly.from_dict(data, *gens, domain=sympy.QQ), n)

    @classmethod
    def parse(cls, text: str, n: int) -> "MultiPoly":
        gens = coordinate_symbols(n)
        expr = parse_polynomial_expr(text, _MULTI_TEXT_RE, {str(g): g for g in gens})
        try:
            return cls(sympy.Poly(expr, *gens, domain=sympy.QQ), n)
        except BasePolynomialError as exc:
            raise InputError(f"not a polynomial in x1..x{n} over QQ: {text!r}") from exc

    @property
    def n(self) -> int:
        return self._n

    @property
    def sympy_poly(self) -> sympy.Poly:
        return self._poly

    @property
    def terms(self) -> dict[tuple[int, ...], Fraction]:
        """Exponent vector to coefficient, graded lexicographic, zero terms omitted."""
        return {monom: from_sympy(coeff) for monom, coeff in self._poly.terms(order="grlex") if coeff != 0}

    @property
    def is_zero(self) -> bool:
        return self._poly.is_zero

    @property
    def total_degree(self) -> int:
        """Total degree, -1 for the zero polynomial."""
        if self.is_zero:
            return -1
        return int(self._poly.total_degree())

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other._n != self._n:
                raise StructuralError(f"coordinate count mismatch: {self._n} vs {other._n}")
            return other
        return MultiPoly.constant(self._n, other)

    def __add__(self, other) -> "MultiPoly":
        return MultiPoly(self._poly + self._coerce(other)._poly, self._n)

    __radd__ = __add__

    def __sub__(self, other) -> "MultiPoly":
        return MultiPoly(self._poly - self._coerce(other)._poly, self._n)

    def __rsub__(self, other) -> "MultiPoly":
        return MultiPoly(self._coerce(other)._poly - self._poly, self._n)

    def __mul__(self, other) -> "MultiPoly":
        return MultiPoly(self._poly * self._coerce(other)._poly, self._n)

    __rmul__ = __mul__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(-self._poly, self._n)

    def __pow__(self, exponent: int) -> "MultiPoly":
        return MultiPoly(self._poly ** exponent, self._n)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_zero if other == 0 else self == MultiPoly.constant(self._n, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._n == other._n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(("MultiPoly", self._n, tuple(self.terms.items())))

    def __bool__(self) -> bool:
        return not self.is_zero

    def derivative(self, index: int) -> "MultiPoly":
        """Partial derivative along x_{index+1}."""
        return MultiPoly(self._poly.diff(coordinate_symbols(self._n)[index]), self._n)

    def gradient(self) -> tuple["MultiPoly", ...]:
        return tuple(self.derivative(i) for i in range(self._n))

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self._n:
            raise StructuralError(f"point has {len(point)} coordinates, expected {self._n}")
        values = [as_rational(v) for v in point]
        total = Fraction(0)
        for monom, coeff in self.terms.items():
            term = coeff
            for value, power in zip(values, monom):
                if power:
                    term *= value ** power
            total += term
        return total

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return sympy.sstr(self._poly.as_expr(), order="grlex").replace("**", "^")

    def __repr__(self) -> str:
        return f"MultiPoly({str(self)!r}, n={self._n})"

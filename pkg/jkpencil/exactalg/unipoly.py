"""
Univariate polynomials over the rationals in the pencil parameter ``l``.

UniPoly is an immutable wrapper over ``sympy.Poly`` with domain ``QQ``.
Coefficient access, evaluation and hashing go through Fractions so values
interoperate with the rest of the package.
"""

import math
import re
from fractions import Fraction
from tokenize import TokenError
from typing import Iterable

import sympy
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)
from sympy.polys.polyerrors import BasePolynomialError, ExactQuotientFailed

from jkpencil.errors import InputError, InternalInconsistency, PreconditionError
from jkpencil.exactalg.scalars import as_rational, format_rational, from_sympy, to_sympy

LAMBDA = sympy.Symbol("l")

_UNI_TEXT_RE = re.compile(r"^[\sl0-9+\-*/^()]+$")
_TRANSFORMS = standard_transformations + (convert_xor,)


def _sympy_text(expr) -> str:
    return sympy.sstr(expr).replace("**", "^")


def parse_polynomial_expr(text: str, allowed: re.Pattern, symbols: dict[str, sympy.Symbol]):
    """Parse restricted polynomial text into a sympy expression."""
    if not isinstance(text, str) or not allowed.match(text):
        raise InputError(f"not a polynomial literal: {text!r}")
    try:
        expr = parse_expr(
            text,
            local_dict=dict(symbols),
            global_dict={"Integer": sympy.Integer, "Rational": sympy.Rational, "Symbol": sympy.Symbol},
            transformations=_TRANSFORMS,
        )
    except (SyntaxError, TokenError, TypeError, ValueError, ZeroDivisionError, sympy.SympifyError) as exc:
        raise InputError(f"cannot parse polynomial {text!r}: {exc}") from exc
    stray = {str(s) for s in getattr(expr, "free_symbols", set())} - set(symbols)
    if stray:
        raise InputError(f"unknown variables {sorted(stray)} in {text!r}")
    return expr


class UniPoly:
    """Polynomial in ``l`` with rational coefficients."""

    __slots__ = ("_poly", "_coeffs")

    def __init__(self, poly: sympy.Poly):
        if poly.gens != (LAMBDA,) or not poly.get_domain().is_QQ:
            poly = sympy.Poly(poly.as_expr(), LAMBDA, domain=sympy.QQ)
        self._poly = poly
        self._coeffs = None

    @classmethod
    def from_coefficients(cls, coefficients: Iterable) -> "UniPoly":
        """Build from coefficients ordered low degree to high."""
        values = [as_rational(c) for c in coefficients]
        while values and values[-1] == 0:
            values.pop()
        if not values:
            return cls.zero()
        return cls(sympy.Poly.from_list([to_sympy(c) for c in reversed(values)], LAMBDA, domain=sympy.QQ))

    @classmethod
    def from_expr(cls, expr) -> "UniPoly":
        try:
            return cls(sympy.Poly(expr, LAMBDA, domain=sympy.QQ))
        except BasePolynomialError as exc:
            raise InputError(f"not a polynomial in l over QQ: {expr}") from exc

    @classmethod
    def constant(cls, value) -> "UniPoly":
        return cls.from_coefficients([value])

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls(sympy.Poly(0, LAMBDA, domain=sympy.QQ))

    @classmethod
    def one(cls) -> "UniPoly":
        return cls.constant(1)

    @classmethod
    def lam(cls) -> "UniPoly":
        return cls.from_coefficients([0, 1])

    @classmethod
    def linear(cls, a, b) -> "UniPoly":
        """The polynomial ``a + b*l``."""
        return cls.from_coefficients([a, b])

    @classmethod
    def parse(cls, text: str) -> "UniPoly":
        expr = parse_polynomial_expr(text, _UNI_TEXT_RE, {"l": LAMBDA})
        try:
            return cls(sympy.Poly(expr, LAMBDA, domain=sympy.QQ))
        except BasePolynomialError as exc:
            raise InputError(f"not a polynomial in l over QQ: {text!r}") from exc

    @property
    def sympy_poly(self) -> sympy.Poly:
        return self._poly

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        """Coefficients low degree to high; empty for the zero polynomial."""
        if self._coeffs is None:
            if self._poly.is_zero:
                self._coeffs = ()
            else:
                self._coeffs = tuple(from_sympy(c) for c in reversed(self._poly.all_coeffs()))
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return -1 if self._poly.is_zero else int(self._poly.degree())

    @property
    def is_zero(self) -> bool:
        return self._poly.is_zero

    @property
    def leading_coefficient(self) -> Fraction:
        return from_sympy(self._poly.LC()) if not self._poly.is_zero else Fraction(0)

    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        return UniPoly.constant(other)

    def __add__(self, other) -> "UniPoly":
        return UniPoly(self._poly + self._coerce(other)._poly)

    __radd__ = __add__

    def __sub__(self, other) -> "UniPoly":
        return UniPoly(self._poly - self._coerce(other)._poly)

    def __rsub__(self, other) -> "UniPoly":
        return UniPoly(self._coerce(other)._poly - self._poly)

    def __mul__(self, other) -> "UniPoly":
        return UniPoly(self._poly * self._coerce(other)._poly)

    __rmul__ = __mul__

    def __neg__(self) -> "UniPoly":
        return UniPoly(-self._poly)

    def __pow__(self, exponent: int) -> "UniPoly":
        return UniPoly(self._poly ** exponent)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = UniPoly.constant(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self._poly == other._poly

    def __hash__(self) -> int:
        return hash(("UniPoly", self.coefficients))

    def __bool__(self) -> bool:
        return not self.is_zero

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        quotient, remainder = self._poly.div(self._coerce(other)._poly)
        return UniPoly(quotient), UniPoly(remainder)

    def exquo(self, other: "UniPoly") -> "UniPoly":
        """Exact quotient; inexact division signals an arithmetic bug."""
        try:
            return UniPoly(self._poly.exquo(self._coerce(other)._poly))
        except ExactQuotientFailed as exc:
            raise InternalInconsistency(f"inexact polynomial division: ({self}) / ({other})") from exc

    def divides(self, other: "UniPoly") -> bool:
        return other.divmod(self)[1].is_zero

    def gcd(self, other: "UniPoly") -> "UniPoly":
        return UniPoly(self._poly.gcd(self._coerce(other)._poly)).canonical()

    def canonical(self) -> "UniPoly":
        """Primitive integer form with positive leading coefficient."""
        if self.is_zero:
            return self
        scale = math.lcm(*(c.denominator for c in self.coefficients))
        ints = [int(c * scale) for c in self.coefficients]
        content = math.gcd(*ints)
        if ints[-1] < 0:
            content = -content
        return UniPoly.from_coefficients([Fraction(c, content) for c in ints])

    def evaluate(self, value) -> Fraction:
        x = as_rational(value)
        result = Fraction(0)
        for c in reversed(self.coefficients):
            result = result * x + c
        return result

    def valuation_at_zero(self) -> int:
        """Multiplicity of the root 0; -1 for the zero polynomial."""
        if self.is_zero:
            return -1
        return next(i for i, c in enumerate(self.coefficients) if c != 0)

    def derivative(self) -> "UniPoly":
        return UniPoly(self._poly.diff(LAMBDA))

    def reflect(self) -> "UniPoly":
        """The polynomial p(-l)."""
        return UniPoly.from_coefficients(c if i % 2 == 0 else -c for i, c in enumerate(self.coefficients))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return _sympy_text(self._poly.as_expr())

    def __repr__(self) -> str:
        return f"UniPoly({str(self)!r})"


def uni_gcd(*polys: UniPoly) -> UniPoly:
    """Canonical gcd of any number of polynomials (zero for none or all-zero)."""
    result = UniPoly.zero()
    for p in polys:
        result = result.gcd(p) if not result.is_zero else p.canonical()
    return result


def squarefree_factor(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Square-free decomposition ``p = c * prod q_i^e_i`` with canonical q_i."""
    if p.degree <= 0:
        return []
    _, factors = p.sympy_poly.sqf_list()
    return [(UniPoly(q).canonical(), e) for q, e in factors]


def irreducible_factors(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Irreducible factorization over QQ, ordered by (degree, text)."""
    if p.degree <= 0:
        return []
    _, factors = p.sympy_poly.factor_list()
    result = [(UniPoly(q).canonical(), e) for q, e in factors]
    return sorted(result, key=lambda item: (item[0].degree, str(item[0])))


def rational_roots(p: UniPoly) -> list[tuple[Fraction, int]]:
    """All rational roots with multiplicity, ascending."""
    if p.is_zero:
        raise PreconditionError("rational_roots: roots of the zero polynomial are undefined")
    roots = []
    for q, e in irreducible_factors(p):
        if q.degree == 1:
            b, a = q.coefficients
            roots.append((-b / a, e))
    return sorted(roots)


def format_factored(p: UniPoly) -> str:
    """Factored text such as ``(l+2)^2``; canonical polynomials only carry unit content."""
    if p.is_zero:
        return "0"
    factors = irreducible_factors(p)
    if not factors:
        return format_rational(p.leading_coefficient)
    product = UniPoly.one()
    for q, e in factors:
        product = product * q ** e
    unit = p.leading_coefficient / product.leading_coefficient
    pieces = []
    if unit != 1:
        pieces.append(format_rational(unit) if unit != -1 else "-")
    for q, e in factors:
        body = f"({str(q).replace(' ', '')})"
        pieces.append(body if e == 1 else f"{body}^{e}")
    text = "*".join(piece for piece in pieces if piece != "-")
    return f"-{text}" if unit == -1 else text

"""
Exact rational scalars.

``Rational`` is ``fractions.Fraction``: arbitrary-precision, always reduced,
denominator positive. Text syntax is ``p`` or ``p/q`` with optional sign.
"""

import re
from fractions import Fraction
from numbers import Rational as _RationalABC

import sympy

from jkpencil.errors import InputError

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` into a Fraction."""
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise InputError(f"not a rational literal: {text!r}")
    numerator, denominator = match.group(1), match.group(2)
    if denominator is not None and int(denominator) == 0:
        raise InputError(f"zero denominator in rational literal: {text!r}")
    return Fraction(int(numerator), int(denominator or 1))


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def as_rational(value: object) -> Fraction:
    """Coerce int, Fraction, rational string or sympy Rational to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InputError(f"not a rational value: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, sympy.Rational):
        return from_sympy(value)
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    raise InputError(f"not a rational value: {value!r}")


def to_sympy(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def from_sympy(value) -> Fraction:
    """Convert a sympy rational (or a QQ domain element) back to Fraction."""
    if hasattr(value, "p") and hasattr(value, "q"):
        return Fraction(int(value.p), int(value.q))
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return Fraction(int(value.numerator), int(value.denominator))
    raise InputError(f"not a rational sympy value: {value!r}")

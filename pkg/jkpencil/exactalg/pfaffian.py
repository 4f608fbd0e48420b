"""
Pfaffians of skew-symmetric matrices over QQ and QQ[l].
"""

from fractions import Fraction

import sympy
from sympy.polys.polyfuncs import interpolate

from jkpencil.errors import StructuralError
from jkpencil.exactalg.matrices import PolyMatrix, RatMatrix
from jkpencil.exactalg.scalars import to_sympy
from jkpencil.exactalg.unipoly import LAMBDA, UniPoly


def _check_skew_even(m: RatMatrix | PolyMatrix):
    if not m.is_square:
        raise StructuralError(f"pfaffian requires a square matrix, got {m.rows}x{m.cols}")
    if m.rows % 2:
        raise StructuralError(f"pfaffian requires even order, got {m.rows}")
    if not m.is_skew():
        raise StructuralError("pfaffian requires a skew-symmetric matrix")


def _rational_pfaffian(entries) -> Fraction:
    """Skew Gaussian elimination, pivoting pairs of indices."""
    n = len(entries)
    a = [list(r) for r in entries]
    result = Fraction(1)
    for k in range(0, n - 1, 2):
        p = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
        if p is None:
            return Fraction(0)
        if p != k + 1:
            # swap index k+1 with p in rows and columns
            a[k + 1], a[p] = a[p], a[k + 1]
            for row in a:
                row[k + 1], row[p] = row[p], row[k + 1]
            result = -result
        pivot = a[k][k + 1]
        result *= pivot
        rest = range(k + 2, n)
        tau = {i: a[k][i] / pivot for i in rest}
        column = {i: a[i][k + 1] for i in rest}
        for i in rest:
            row = a[i]
            ti, ci = tau[i], column[i]
            for j in rest:
                row[j] += ti * column[j] - ci * tau[j]
    return result


def pfaffian(m: RatMatrix | PolyMatrix) -> Fraction | UniPoly:
    """Pf(m) with Pf(m)^2 = det(m); Pf of the empty matrix is 1.

    Polynomial matrices are evaluated at deg+1 integer points and the
    values interpolated.
    """
    _check_skew_even(m)
    if isinstance(m, RatMatrix):
        return _rational_pfaffian(m.entries)
    if m.rows == 0:
        return UniPoly.one()
    bound = max(m.max_degree(), 0) * (m.rows // 2)
    samples = [(t, _rational_pfaffian(m.evaluate(t).entries)) for t in range(bound + 1)]
    return interpolate_samples(samples)


def interpolate_samples(samples: list[tuple[int, Fraction]]) -> UniPoly:
    """Polynomial through the given (point, value) samples."""
    if all(value == 0 for _, value in samples):
        return UniPoly.zero()
    if len(samples) == 1:
        return UniPoly.constant(samples[0][1])
    expr = interpolate([(sympy.Integer(t), to_sympy(v)) for t, v in samples], LAMBDA)
    return UniPoly.from_expr(sympy.expand(expr))

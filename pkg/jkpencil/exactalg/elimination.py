"""
Fraction-free elimination over ZZ/QQ and QQ[l].

Ranks go through Bareiss elimination: every intermediate entry is a minor of
the input, so divisions by the previous pivot are exact. Rational rows are
first scaled to integers (row scaling changes neither rank nor row space).
"""

import logging
import math
from fractions import Fraction
from typing import Callable, Sequence, TypeVar

from jkpencil.errors import StructuralError
from jkpencil.exactalg.matrices import PolyMatrix, RatMatrix, Vector
from jkpencil.exactalg.unipoly import UniPoly

logger = logging.getLogger(__name__)

T = TypeVar("T")


def _integer_row(row: Sequence[Fraction]) -> list[int]:
    scale = math.lcm(*(Fraction(a).denominator for a in row)) if row else 1
    return [int(a * scale) for a in row]


def bareiss_echelon(
    rows: Sequence[Sequence[T]],
    ncols: int,
    exact_div: Callable[[T, T], T],
    is_zero: Callable[[T], bool],
    one: T,
    zero: T,
) -> tuple[list[list[T]], list[int], int]:
    """Fraction-free row echelon form.

    Returns (echelon rows, pivot columns, row-swap parity). Columns with no
    usable pivot are skipped; the Sylvester identity still makes every
    division exact.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    pivots: list[int] = []
    previous = one
    swaps = 0
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if not is_zero(m[i][c])), None)
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
            swaps += 1
        pivot_row = m[r]
        pivot = pivot_row[c]
        for i in range(r + 1, nrows):
            row = m[i]
            factor = row[c]
            if is_zero(factor):
                for j in range(c + 1, ncols):
                    row[j] = exact_div(pivot * row[j], previous)
            else:
                for j in range(c + 1, ncols):
                    row[j] = exact_div(pivot * row[j] - factor * pivot_row[j], previous)
            row[c] = zero
        previous = pivot
        pivots.append(c)
        r += 1
    return m[:r], pivots, swaps


def _int_echelon(rows: Sequence[Sequence[Fraction]], ncols: int):
    return bareiss_echelon(
        [_integer_row(r) for r in rows], ncols,
        exact_div=lambda a, b: a // b, is_zero=lambda a: a == 0, one=1, zero=0,
    )


def rank(m: RatMatrix) -> int:
    """Rank over QQ."""
    if m.rows == 0 or m.cols == 0:
        return 0
    _, pivots, _ = _int_echelon(m.entries, m.cols)
    return len(pivots)


def rank_of_rows(rows: Sequence[Sequence[Fraction]], ncols: int) -> int:
    if not rows or ncols == 0:
        return 0
    _, pivots, _ = _int_echelon(rows, ncols)
    return len(pivots)


def rank_symbolic(m: PolyMatrix) -> int:
    """Rank over the rational function field QQ(l)."""
    if m.rows == 0 or m.cols == 0:
        return 0
    _, pivots, _ = bareiss_echelon(
        m.entries, m.cols,
        exact_div=UniPoly.exquo, is_zero=lambda p: p.is_zero,
        one=UniPoly.one(), zero=UniPoly.zero(),
    )
    logger.debug("symbolic rank of %dx%d polynomial matrix: %d", m.rows, m.cols, len(pivots))
    return len(pivots)


def determinant(m: RatMatrix) -> Fraction:
    if not m.is_square:
        raise StructuralError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    if m.rows == 0:
        return Fraction(1)
    scales = [math.lcm(*(a.denominator for a in r)) for r in m.entries]
    echelon, pivots, swaps = _int_echelon(m.entries, m.cols)
    if len(pivots) < m.rows:
        return Fraction(0)
    value = Fraction(echelon[-1][-1], math.prod(scales))
    return -value if swaps % 2 else value


def rref(rows: Sequence[Sequence[Fraction]], ncols: int) -> tuple[tuple[Vector, ...], tuple[int, ...]]:
    """Reduced row echelon form with zero rows dropped, plus pivot columns."""
    if not rows or ncols == 0:
        return (), ()
    echelon, pivots, _ = _int_echelon(rows, ncols)
    reduced = [[Fraction(a) for a in r] for r in echelon]
    for k in range(len(reduced) - 1, -1, -1):
        c = pivots[k]
        row = reduced[k]
        inv = 1 / row[c]
        for j in range(c, ncols):
            row[j] *= inv
        for i in range(k):
            factor = reduced[i][c]
            if factor:
                other = reduced[i]
                for j in range(c, ncols):
                    other[j] -= factor * row[j]
    return tuple(tuple(r) for r in reduced), tuple(pivots)


def kernel_of_rows(rows: Sequence[Sequence[Fraction]], ncols: int) -> tuple[Vector, ...]:
    """RREF basis of {x : r . x = 0 for every row r}."""
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for k, c in enumerate(pivots):
            v[c] = -reduced[k][free]
        basis.append(v)
    return rref(basis, ncols)[0]


def kernel(m: RatMatrix) -> tuple[Vector, ...]:
    """Right null space of m, as RREF basis rows."""
    return kernel_of_rows(m.entries, m.cols)


def solve(m: RatMatrix, b: Sequence[Fraction]) -> Vector | None:
    """One solution x of m x = b, or None when b is outside the image."""
    if len(b) != m.rows:
        raise StructuralError(f"right-hand side of length {len(b)} for {m.rows} equations")
    if m.rows == 0:
        return tuple(Fraction(0) for _ in range(m.cols))
    augmented = [list(r) + [Fraction(v)] for r, v in zip(m.entries, b)]
    reduced, pivots = rref(augmented, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [Fraction(0)] * m.cols
    for k, c in enumerate(pivots):
        x[c] = reduced[k][m.cols]
    return tuple(x)


def inverse(m: RatMatrix) -> RatMatrix:
    if not m.is_square:
        raise StructuralError(f"inverse of a non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    augmented = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(m.entries)]
    reduced, pivots = rref(augmented, 2 * n)
    if tuple(pivots[:n]) != tuple(range(n)) or len(pivots) != n:
        raise StructuralError("matrix is singular")
    return RatMatrix.from_rows((r[n:] for r in reduced), n)

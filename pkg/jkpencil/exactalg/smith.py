"""
Smith normal form of polynomial matrices over QQ[l].
"""

import logging

from jkpencil.exactalg.matrices import PolyMatrix
from jkpencil.exactalg.unipoly import UniPoly

logger = logging.getLogger(__name__)


def _min_degree_entry(a, t: int, rows: int, cols: int) -> tuple[int, int] | None:
    best = None
    best_degree = None
    for i in range(t, rows):
        for j in range(t, cols):
            d = a[i][j].degree
            if d >= 0 and (best_degree is None or d < best_degree):
                best, best_degree = (i, j), d
                if d == 0:
                    return best
    return best


def _swap_into_place(a, t: int, i: int, j: int):
    if i != t:
        a[t], a[i] = a[i], a[t]
    if j != t:
        for row in a:
            row[t], row[j] = row[j], row[t]


def smith_form(m: PolyMatrix) -> list[UniPoly]:
    """Nonzero invariant factors d_1 | d_2 | ... | d_r in canonical form.

    Pivot is the nonzero entry of minimal degree, ties broken by (row, col).
    """
    a = [list(r) for r in m.entries]
    rows, cols = m.rows, m.cols
    factors: list[UniPoly] = []
    for t in range(min(rows, cols)):
        position = _min_degree_entry(a, t, rows, cols)
        if position is None:
            break
        _swap_into_place(a, t, *position)
        while True:
            pivot = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t].is_zero:
                    continue
                q, r = a[i][t].divmod(pivot)
                a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                dirty = dirty or not r.is_zero
            for j in range(t + 1, cols):
                if a[t][j].is_zero:
                    continue
                q, r = a[t][j].divmod(pivot)
                for row in a[t:]:
                    row[j] = row[j] - q * row[t]
                dirty = dirty or not r.is_zero
            if dirty:
                # a remainder of lower degree now sits in row t or column t
                candidates = [(i, t) for i in range(t, rows) if not a[i][t].is_zero]
                candidates += [(t, j) for j in range(t + 1, cols) if not a[t][j].is_zero]
                i, j = min(candidates, key=lambda ij: (a[ij[0]][ij[1]].degree, ij))
                _swap_into_place(a, t, i, j)
                continue
            blocker = next(
                ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                 if not a[i][j].is_zero and not pivot.divides(a[i][j])),
                None,
            )
            if blocker is None:
                break
            i, _ = blocker
            a[t] = [x + y for x, y in zip(a[t], a[i])]
        factors.append(a[t][t].canonical())
    logger.debug("smith form of %dx%d matrix: %s", rows, cols, [str(f) for f in factors])
    return factors

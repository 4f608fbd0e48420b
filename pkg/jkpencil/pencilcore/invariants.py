"""
Discrete invariants of skew pencils: rank, characteristic polynomial,
eigenvalues, Jordan and Kronecker data.
"""

import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from jkpencil.errors import InternalInconsistency, StructuralError
from jkpencil.exactalg import (
    RatMatrix,
    UniPoly,
    format_factored,
    inverse,
    irreducible_factors,
    pfaffian,
    rational_roots,
    rank,
    rank_of_rows,
    rank_symbolic,
    smith_form,
)
from jkpencil.exactalg.pfaffian import interpolate_samples
from jkpencil.pencilcore.pencil import (
    INF,
    EigenKey,
    FactorClass,
    ProjParam,
    SkewPencil,
    eigen_sort_key,
    eigen_to_json,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CharPoly:
    """gcd of the Pfaffians of the principal minors of order rk P, canonical form."""
    p: UniPoly

    def singular_parameters(self) -> list[tuple[Fraction, int]]:
        """Rational parameter values where the pencil drops rank (negated eigenvalues)."""
        return rational_roots(self.p)

    def __str__(self) -> str:
        return format_factored(self.p)


@dataclass(frozen=True)
class JKInvariants:
    """Kronecker indices k_i and Jordan half-sizes per eigenvalue."""
    n: int
    rank: int
    kronecker: tuple[int, ...] = ()
    jordan: tuple[tuple[EigenKey, tuple[int, ...]], ...] = field(default=())

    @property
    def jordan_map(self) -> dict[EigenKey, tuple[int, ...]]:
        return dict(self.jordan)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "rank": self.rank,
            "kronecker": list(self.kronecker),
            "jordan": [{"eig": eigen_to_json(e), "halfsizes": list(m)} for e, m in self.jordan],
        }


def make_invariants(n: int, rank_: int, kronecker, jordan: dict) -> JKInvariants:
    """Normalize ordering so equal invariants compare equal."""
    ordered = tuple((e, tuple(sorted(jordan[e]))) for e in sorted(jordan, key=eigen_sort_key) if jordan[e])
    return JKInvariants(n=n, rank=rank_, kronecker=tuple(sorted(kronecker)), jordan=ordered)


def pencil_rank(pencil: SkewPencil) -> int:
    """Rank of A + l*B over QQ(l)."""
    r = rank_symbolic(pencil.poly_matrix())
    rb = rank(pencil.B)
    if rb > r:
        raise InternalInconsistency(f"rank of B ({rb}) exceeds the pencil rank ({r})")
    if r % 2:
        raise InternalInconsistency(f"odd rank {r} for a skew pencil")
    return r


def char_poly(pencil: SkewPencil, pencil_rank_: int | None = None) -> CharPoly:
    r = pencil_rank(pencil) if pencil_rank_ is None else pencil_rank_
    if r == 0:
        return CharPoly(UniPoly.one())
    points = range(r // 2 + 1)
    samples = [pencil.at(t) for t in points]
    g = UniPoly.zero()
    for indices in combinations(range(pencil.n), r):
        values = [pfaffian(m.principal(indices)) for m in samples]
        pf = interpolate_samples(list(zip(points, values)))
        if pf.is_zero:
            continue
        g = pf.canonical() if g.is_zero else g.gcd(pf)
        if g.degree == 0:
            break
    if g.is_zero:
        raise InternalInconsistency("every principal Pfaffian of order rk P vanished")
    return CharPoly(g.canonical())


def _eigen_key_for_factor(q: UniPoly) -> EigenKey:
    """Map an irreducible factor of the parameter polynomial to eigenvalue data."""
    if q.degree == 1:
        b, a = q.coefficients
        # parameter root -b/a, eigenvalue b/a
        return ProjParam(b / a)
    return FactorClass(q.reflect().canonical())


def eigenvalue_set(pencil: SkewPencil) -> list[EigenKey]:
    """Eigenvalues (rank drop of A - c*B below rk P), sorted, infinity last."""
    r = pencil_rank(pencil)
    result: list[EigenKey] = []
    for q, _ in irreducible_factors(char_poly(pencil, r).p):
        result.append(_eigen_key_for_factor(q))
    if rank(pencil.B) < r:
        result.append(INF)
    return sorted(result, key=eigen_sort_key)


def is_eigenvalue(pencil: SkewPencil, eig: ProjParam, pencil_rank_: int | None = None) -> bool:
    r = pencil_rank(pencil) if pencil_rank_ is None else pencil_rank_
    form = pencil.B if eig.is_infinite else pencil.shifted(eig.value)
    return rank(form) < r


def _paired_halfsizes(valuations: Counter, label: str) -> list[int]:
    halfsizes = []
    for exponent, count in sorted(valuations.items()):
        if count % 2:
            raise InternalInconsistency(
                f"elementary divisor of degree {exponent} at {label} has odd multiplicity {count}")
        halfsizes.extend([exponent] * (count // 2))
    return halfsizes


def jordan_structure(pencil: SkewPencil) -> dict[EigenKey, tuple[int, ...]]:
    """Jordan half-sizes per eigenvalue, from elementary divisors."""
    finite: dict[UniPoly, Counter] = {}
    for d in smith_form(pencil.poly_matrix()):
        for q, e in irreducible_factors(d):
            finite.setdefault(q, Counter())[e] += 1
    result: dict[EigenKey, tuple[int, ...]] = {}
    for q, valuations in finite.items():
        eig = _eigen_key_for_factor(q)
        result[eig] = tuple(_paired_halfsizes(valuations, str(eig)))

    at_infinity: Counter = Counter()
    for d in smith_form(pencil.reversed().poly_matrix()):
        v = d.valuation_at_zero()
        if v > 0:
            at_infinity[v] += 1
    if at_infinity:
        result[INF] = tuple(_paired_halfsizes(at_infinity, "inf"))
    logger.debug("jordan structure: %s", {str(k): v for k, v in result.items()})
    return dict(sorted(result.items(), key=lambda item: eigen_sort_key(item[0])))


def _integer_pencil(pencil: SkewPencil) -> tuple[list[list[int]], list[list[int]]]:
    scale = math.lcm(*(x.denominator for m in (pencil.A, pencil.B) for row in m.entries for x in row), 1)
    a = [[int(x * scale) for x in row] for row in pencil.A.entries]
    b = [[int(x * scale) for x in row] for row in pencil.B.entries]
    return a, b


def _toeplitz_rows(a, b, n: int, d: int) -> list[list[int]]:
    """Block Toeplitz matrix of (A, B) acting on coefficient stacks (v_0..v_d)."""
    width = (d + 1) * n
    rows = []
    for j in range(d + 2):
        for i in range(n):
            row = [0] * width
            if j <= d:
                row[j * n:(j + 1) * n] = a[i]
            if j >= 1:
                row[(j - 1) * n:j * n] = b[i]
            rows.append(row)
    return rows


def kronecker_indices(pencil: SkewPencil, pencil_rank_: int | None = None) -> tuple[int, ...]:
    """Kronecker indices k_i = eps_i + 1 from the polynomial-kernel degree profile."""
    n = pencil.n
    r = pencil_rank(pencil) if pencil_rank_ is None else pencil_rank_
    corank = n - r
    if corank == 0:
        return ()
    a, b = _integer_pencil(pencil)
    indices: list[int] = []
    previous_nullity = 0
    previous_count = 0
    for d in range(n + 1):
        width = (d + 1) * n
        nullity = width - rank_of_rows(_toeplitz_rows(a, b, n, d), width)
        # number of minimal indices <= d
        count = nullity - previous_nullity
        indices.extend([d + 1] * (count - previous_count))
        previous_nullity, previous_count = nullity, count
        if count == corank:
            break
    else:
        raise InternalInconsistency(f"found {len(indices)} minimal indices, expected {corank}")
    return tuple(sorted(indices))


def jk_invariants(pencil: SkewPencil) -> JKInvariants:
    n = pencil.n
    r = pencil_rank(pencil)
    kron = kronecker_indices(pencil, r)
    jordan = jordan_structure(pencil)
    if len(kron) != n - r:
        raise InternalInconsistency(f"{len(kron)} Kronecker blocks for corank {n - r}")
    weight = {e: (e.poly.degree if isinstance(e, FactorClass) else 1) for e in jordan}
    size = sum(2 * k - 1 for k in kron) + sum(2 * m * weight[e] for e, ms in jordan.items() for m in ms)
    if size != n:
        raise InternalInconsistency(f"block sizes sum to {size}, expected {n}")
    generic = 2 * (sum(k - 1 for k in kron) + sum(m * weight[e] for e, ms in jordan.items() for m in ms))
    if generic != r:
        raise InternalInconsistency(f"block data give rank {generic}, pencil rank is {r}")
    return make_invariants(n, r, kron, jordan)


def jk_pattern(inv: JKInvariants) -> tuple:
    """Invariants with eigenvalue values forgotten; infinity kept distinct."""
    finite = sorted(
        (e.poly.degree if isinstance(e, FactorClass) else 1, ms)
        for e, ms in inv.jordan if not (isinstance(e, ProjParam) and e.is_infinite)
    )
    infinite = next((ms for e, ms in inv.jordan if isinstance(e, ProjParam) and e.is_infinite), ())
    return inv.kronecker, tuple(finite), infinite


def regular_form(pencil: SkewPencil) -> tuple[ProjParam, RatMatrix]:
    """First nondegenerate form among B, A, A+B, A+2B, ..."""
    n = pencil.n
    if rank(pencil.B) == n:
        return INF, pencil.B
    for c in range(0, 2 * n + 2):
        form = pencil.at(c)
        if rank(form) == n:
            return ProjParam.finite(c), form
    raise StructuralError("pencil is degenerate: no nondegenerate form")


def recursion_operator(pencil: SkewPencil, regular: ProjParam | None = None) -> RatMatrix:
    """B^{-1} A when B is nondegenerate, else R^{-1} A for the first nondegenerate R = A + cB."""
    if regular is None:
        if rank(pencil.B) == pencil.n:
            return inverse(pencil.B) @ pencil.A
        for c in range(1, 2 * pencil.n + 2):
            form = pencil.at(c)
            if rank(form) == pencil.n:
                return inverse(form) @ pencil.A
        raise StructuralError("recursion operator needs a nondegenerate pencil")
    form = pencil.at(regular)
    if rank(form) < pencil.n:
        raise StructuralError(f"form at {regular} is degenerate")
    other = pencil.B if regular == ProjParam.finite(0) else pencil.A
    return inverse(form) @ other

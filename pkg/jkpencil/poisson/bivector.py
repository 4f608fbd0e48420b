"""
Polynomial bivectors on QQ^n and their Schouten bracket.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Sequence

from jkpencil.errors import StructuralError
from jkpencil.exactalg import MultiPoly, RatMatrix, as_rational

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Guardrails:
    """Size limits for symbolic Schouten expansion."""
    max_degree: int = 4
    max_dim: int = 8


DEFAULT_GUARDRAILS = Guardrails()


@dataclass(frozen=True)
class PolyBivector:
    """Skew matrix of polynomials Pi^{ij}(x); only i < j is stored."""
    n: int
    upper: tuple[tuple[MultiPoly, ...], ...]

    def __post_init__(self):
        if len(self.upper) != max(self.n - 1, 0) or any(len(r) != self.n - 1 - i for i, r in enumerate(self.upper)):
            raise StructuralError(f"bivector upper triangle does not match n={self.n}")

    @classmethod
    def from_entries(cls, n: int, entries: Mapping[tuple[int, int], MultiPoly | str]) -> "PolyBivector":
        """Build from {(i, j): poly} with 0-based i != j; (j, i) entries are implied."""
        grid = [[MultiPoly.zero(n) for _ in range(n - 1 - i)] for i in range(n - 1)]
        for (i, j), value in entries.items():
            if not (0 <= i < n and 0 <= j < n) or i == j:
                raise StructuralError(f"bivector index ({i + 1},{j + 1}) out of range for n={n}")
            poly = MultiPoly.parse(value, n) if isinstance(value, str) else value
            if i > j:
                i, j, poly = j, i, -poly
            grid[i][j - i - 1] = poly
        return cls(n, tuple(tuple(r) for r in grid))

    @classmethod
    def constant(cls, matrix: RatMatrix) -> "PolyBivector":
        if not matrix.is_skew():
            raise StructuralError("constant bivector needs a skew-symmetric matrix")
        n = matrix.rows
        return cls.from_entries(n, {
            (i, j): MultiPoly.constant(n, matrix[i, j]) for i in range(n) for j in range(i + 1, n)})

    @classmethod
    def zero(cls, n: int) -> "PolyBivector":
        return cls.from_entries(n, {})

    def entry(self, i: int, j: int) -> MultiPoly:
        if i == j:
            return MultiPoly.zero(self.n)
        if i < j:
            return self.upper[i][j - i - 1]
        return -self.upper[j][i - j - 1]

    def nonzero_entries(self) -> dict[tuple[int, int], MultiPoly]:
        return {(i, j): self.entry(i, j) for i, j in combinations(range(self.n), 2) if not self.entry(i, j).is_zero}

    @property
    def degree(self) -> int:
        return max((p.total_degree for row in self.upper for p in row), default=-1)

    def _combine(self, other: "PolyBivector", op) -> "PolyBivector":
        if other.n != self.n:
            raise StructuralError(f"bivectors on different spaces: {self.n} vs {other.n}")
        return PolyBivector(self.n, tuple(
            tuple(op(a, b) for a, b in zip(r, s)) for r, s in zip(self.upper, other.upper)))

    def __add__(self, other: "PolyBivector") -> "PolyBivector":
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other: "PolyBivector") -> "PolyBivector":
        return self._combine(other, lambda a, b: a - b)

    def scale(self, factor: MultiPoly | int) -> "PolyBivector":
        """Multiply every entry by a function or constant."""
        return PolyBivector(self.n, tuple(tuple(p * factor for p in r) for r in self.upper))

    def apply(self, covector: Sequence[MultiPoly]) -> tuple[MultiPoly, ...]:
        """(Pi alpha)^i = sum_j Pi^{ij} alpha_j."""
        if len(covector) != self.n:
            raise StructuralError(f"covector of length {len(covector)}, expected {self.n}")
        result = []
        for i in range(self.n):
            total = MultiPoly.zero(self.n)
            for j in range(self.n):
                if i != j and not covector[j].is_zero:
                    total = total + self.entry(i, j) * covector[j]
            result.append(total)
        return tuple(result)

    def matrix_at(self, point: Sequence) -> RatMatrix:
        values = [as_rational(v) for v in point]
        rows = [[self.entry(i, j).evaluate(values) if i != j else 0 for j in range(self.n)] for i in range(self.n)]
        return RatMatrix.from_rows(rows, self.n)

    def is_zero(self) -> bool:
        return all(p.is_zero for r in self.upper for p in r)

    def to_json(self) -> dict:
        return {"n": self.n, "entries": {f"{i + 1},{j + 1}": str(p) for (i, j), p in self.nonzero_entries().items()}}


@dataclass(frozen=True)
class Trivector:
    """Components T^{ijk} for i < j < k."""
    n: int
    components: tuple[tuple[tuple[int, int, int], MultiPoly], ...]

    def is_zero(self) -> bool:
        return all(p.is_zero for _, p in self.components)

    def nonzero_components(self) -> dict[tuple[int, int, int], MultiPoly]:
        return {ijk: p for ijk, p in self.components if not p.is_zero}

    def to_json(self) -> dict:
        return {f"{i + 1},{j + 1},{k + 1}": str(p) for (i, j, k), p in self.nonzero_components().items()}


def check_guardrails(guardrails: Guardrails, *bivectors: PolyBivector):
    for p in bivectors:
        if p.n > guardrails.max_dim:
            raise StructuralError(f"symbolic check limited to n <= {guardrails.max_dim}, got n={p.n}")
        if p.degree > guardrails.max_degree:
            raise StructuralError(
                f"symbolic check limited to entries of degree <= {guardrails.max_degree}, got {p.degree}")


def schouten_bracket(p: PolyBivector, q: PolyBivector, guardrails: Guardrails = DEFAULT_GUARDRAILS) -> Trivector:
    """[p, q]^{ijk} = cyclic sum over (i,j,k) of sum_l (p^{li} d_l q^{jk} + q^{li} d_l p^{jk})."""
    if p.n != q.n:
        raise StructuralError(f"bivectors on different spaces: {p.n} vs {q.n}")
    check_guardrails(guardrails, p, q)
    n = p.n
    dp = {(i, j): p.entry(i, j).gradient() for i, j in combinations(range(n), 2)}
    dq = {(i, j): q.entry(i, j).gradient() for i, j in combinations(range(n), 2)}

    def partial(grads, a, b, l):
        if a < b:
            return grads[(a, b)][l]
        return -grads[(b, a)][l]

    components = []
    for i, j, k in combinations(range(n), 3):
        total = MultiPoly.zero(n)
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            for l in range(n):
                pla, qla = p.entry(l, a), q.entry(l, a)
                if not pla.is_zero:
                    total = total + pla * partial(dq, b, c, l)
                if not qla.is_zero:
                    total = total + qla * partial(dp, b, c, l)
        components.append(((i, j, k), total))
    logger.debug("schouten bracket on n=%d: %d nonzero components", n,
                 sum(1 for _, t in components if not t.is_zero))
    return Trivector(n, tuple(components))


def is_poisson(p: PolyBivector, guardrails: Guardrails = DEFAULT_GUARDRAILS) -> bool:
    return schouten_bracket(p, p, guardrails).is_zero()


def is_compatible(p: PolyBivector, q: PolyBivector, guardrails: Guardrails = DEFAULT_GUARDRAILS) -> bool:
    return schouten_bracket(p, q, guardrails).is_zero()

"""
Dense exact matrices over QQ (RatMatrix) and over QQ[l] (PolyMatrix).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from jkpencil.errors import StructuralError
from jkpencil.exactalg.scalars import as_rational, format_rational
from jkpencil.exactalg.unipoly import UniPoly

Vector = tuple[Fraction, ...]


def as_vector(values: Iterable) -> Vector:
    return tuple(as_rational(v) for v in values)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


@dataclass(frozen=True)
class RatMatrix:
    """A rows x cols grid of Fractions. Skew-symmetry is not assumed."""
    rows: int
    cols: int
    entries: tuple[Vector, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise StructuralError(f"ragged matrix: declared {self.rows}x{self.cols}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], cols: int | None = None) -> "RatMatrix":
        grid = tuple(as_vector(r) for r in rows)
        if cols is None:
            cols = len(grid[0]) if grid else 0
        return cls(len(grid), cols, grid)

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "RatMatrix":
        cols = rows if cols is None else cols
        return cls(rows, cols, tuple((Fraction(0),) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(n, n, tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "RatMatrix":
        return RatMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else tuple(() for _ in range(self.cols)))

    def _check_same_shape(self, other: "RatMatrix"):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise StructuralError(f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        self._check_same_shape(other)
        return RatMatrix(self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)))

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        return self + other.scale(-1)

    def __neg__(self) -> "RatMatrix":
        return self.scale(-1)

    def scale(self, c) -> "RatMatrix":
        c = as_rational(c)
        return RatMatrix(self.rows, self.cols, tuple(tuple(c * a for a in r) for r in self.entries))

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise StructuralError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        columns = [other.column(j) for j in range(other.cols)]
        return RatMatrix(self.rows, other.cols, tuple(
            tuple(dot(r, c) for c in columns) for r in self.entries))

    def apply(self, vector: Sequence) -> Vector:
        v = as_vector(vector)
        if len(v) != self.cols:
            raise StructuralError(f"vector of length {len(v)} for a {self.rows}x{self.cols} matrix")
        return tuple(dot(r, v) for r in self.entries)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "RatMatrix":
        return RatMatrix(len(rows), len(cols), tuple(tuple(self.entries[i][j] for j in cols) for i in rows))

    def principal(self, indices: Sequence[int]) -> "RatMatrix":
        return self.submatrix(indices, indices)

    def hstack(self, other: "RatMatrix") -> "RatMatrix":
        if self.rows != other.rows:
            raise StructuralError("hstack needs equal row counts")
        return RatMatrix(self.rows, self.cols + other.cols, tuple(r + s for r, s in zip(self.entries, other.entries)))

    def vstack(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.cols:
            raise StructuralError("vstack needs equal column counts")
        return RatMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def is_zero(self) -> bool:
        return all(a == 0 for r in self.entries for a in r)

    def is_skew(self) -> bool:
        return self.is_square and all(
            self.entries[i][j] == -self.entries[j][i] for i in range(self.rows) for j in range(i, self.cols))

    def to_strings(self) -> list[list[str]]:
        return [[format_rational(a) for a in r] for r in self.entries]


def block_diagonal(*blocks: RatMatrix) -> RatMatrix:
    n = sum(b.rows for b in blocks)
    m = sum(b.cols for b in blocks)
    grid = [[Fraction(0)] * m for _ in range(n)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                grid[r0 + i][c0 + j] = b.entries[i][j]
        r0 += b.rows
        c0 += b.cols
    return RatMatrix.from_rows(grid, m)


@dataclass(frozen=True)
class PolyMatrix:
    """A rows x cols grid of UniPoly in the parameter ``l``."""
    rows: int
    cols: int
    entries: tuple[tuple[UniPoly, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise StructuralError(f"ragged polynomial matrix: declared {self.rows}x{self.cols}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[UniPoly]], cols: int | None = None) -> "PolyMatrix":
        grid = tuple(tuple(r) for r in rows)
        if cols is None:
            cols = len(grid[0]) if grid else 0
        return cls(len(grid), cols, grid)

    @classmethod
    def linear(cls, a: RatMatrix, b: RatMatrix) -> "PolyMatrix":
        """The matrix ``a + l*b``."""
        if (a.rows, a.cols) != (b.rows, b.cols):
            raise StructuralError(f"pencil parts differ in shape: {a.rows}x{a.cols} vs {b.rows}x{b.cols}")
        return cls(a.rows, a.cols, tuple(
            tuple(UniPoly.linear(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a.entries, b.entries)))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: tuple[int, int]) -> UniPoly:
        i, j = index
        return self.entries[i][j]

    def evaluate(self, value) -> RatMatrix:
        return RatMatrix(self.rows, self.cols, tuple(tuple(p.evaluate(value) for p in r) for r in self.entries))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix(len(rows), len(cols), tuple(tuple(self.entries[i][j] for j in cols) for i in rows))

    def principal(self, indices: Sequence[int]) -> "PolyMatrix":
        return self.submatrix(indices, indices)

    def max_degree(self) -> int:
        return max((p.degree for r in self.entries for p in r), default=-1)

    def is_skew(self) -> bool:
        return self.is_square and all(
            self.entries[i][j] == -self.entries[j][i] for i in range(self.rows) for j in range(i, self.cols))

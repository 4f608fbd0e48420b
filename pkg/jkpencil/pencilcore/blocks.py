"""
Canonical Jordan and Kronecker blocks, direct sums and congruences.
"""

from fractions import Fraction

from jkpencil.errors import StructuralError
from jkpencil.exactalg import RatMatrix, as_rational, block_diagonal, rank
from jkpencil.pencilcore.pencil import ProjParam, SkewPencil


def _skew_from_corner(corner: list[list[Fraction]], top: int, right: int) -> RatMatrix:
    """[[0, X], [-X^T, 0]] for a top x right corner X."""
    n = top + right
    grid = [[Fraction(0)] * n for _ in range(n)]
    for i in range(top):
        for j in range(right):
            grid[i][top + j] = corner[i][j]
            grid[top + j][i] = -corner[i][j]
    return RatMatrix.from_rows(grid, n)


def _shifted_identity(m: int, diagonal: Fraction, superdiagonal: Fraction) -> list[list[Fraction]]:
    return [[diagonal if i == j else superdiagonal if j == i + 1 else Fraction(0) for j in range(m)]
            for i in range(m)]


def build_jordan_block(eig: ProjParam, m: int) -> SkewPencil:
    """The 2m x 2m Jordan block with eigenvalue eig (finite or infinite)."""
    if m < 1:
        raise StructuralError(f"Jordan half-size must be >= 1, got {m}")
    identity = _shifted_identity(m, Fraction(1), Fraction(0))
    if eig.is_infinite:
        a = _skew_from_corner(identity, m, m)
        b = _skew_from_corner(_shifted_identity(m, Fraction(0), Fraction(1)), m, m)
    else:
        a = _skew_from_corner(_shifted_identity(m, eig.value, Fraction(1)), m, m)
        b = _skew_from_corner(identity, m, m)
    return SkewPencil(a, b)


def build_kronecker_block(k: int) -> SkewPencil:
    """The (2k-1) x (2k-1) Kronecker block; k = 1 is the 1 x 1 zero pencil."""
    if k < 1:
        raise StructuralError(f"Kronecker index must be >= 1, got {k}")
    top, right = k - 1, k
    a_corner = [[Fraction(int(j == i)) for j in range(right)] for i in range(top)]
    b_corner = [[Fraction(int(j == i + 1)) for j in range(right)] for i in range(top)]
    return SkewPencil(_skew_from_corner(a_corner, top, right), _skew_from_corner(b_corner, top, right))


def direct_sum(*pencils: SkewPencil) -> SkewPencil:
    return SkewPencil(block_diagonal(*(p.A for p in pencils)), block_diagonal(*(p.B for p in pencils)))


def congruence_transform(pencil: SkewPencil, s: RatMatrix) -> SkewPencil:
    """(S^T A S, S^T B S) for invertible S."""
    if not s.is_square or s.rows != pencil.n:
        raise StructuralError(f"congruence matrix must be {pencil.n}x{pencil.n}, got {s.rows}x{s.cols}")
    if rank(s) < s.rows:
        raise StructuralError("congruence matrix is singular")
    st = s.transpose()
    return SkewPencil(st @ pencil.A @ s, st @ pencil.B @ s)


def rebase(pencil: SkewPencil, a, b, c, d) -> SkewPencil:
    """The pencil spanned by aA + bB and cA + dB (requires ad - bc != 0)."""
    a, b, c, d = (as_rational(x) for x in (a, b, c, d))
    if a * d - b * c == 0:
        raise StructuralError("rebase coefficients are linearly dependent")
    return SkewPencil(
        pencil.A.scale(a) + pencil.B.scale(b),
        pencil.A.scale(c) + pencil.B.scale(d),
    )

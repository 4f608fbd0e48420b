"""
Shared canonical pencils for the test suite.
"""

from fractions import Fraction

import pytest

from jkpencil.exactalg import RatMatrix
from jkpencil.pencilcore import INF, ProjParam, SkewPencil, build_jordan_block, build_kronecker_block, direct_sum
from jkpencil.poisson import PolyBivector, PolyPencil

# the 5x5 example: one Kronecker block with k = 3, printed as matrices
K3_A = [
    [0, 0, 1, 0, 0],
    [0, 0, 0, 1, 0],
    [-1, 0, 0, 0, 0],
    [0, -1, 0, 0, 0],
    [0, 0, 0, 0, 0],
]
K3_B = [
    [0, 0, 0, 1, 0],
    [0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0],
    [-1, 0, 0, 0, 0],
    [0, -1, 0, 0, 0],
]


def unit_vector(n: int, i: int) -> tuple[Fraction, ...]:
    """e_i with a 1-based index."""
    return tuple(Fraction(int(j == i - 1)) for j in range(n))


@pytest.fixture
def unit():
    return unit_vector


@pytest.fixture
def k3_pencil() -> SkewPencil:
    return SkewPencil.from_rows(K3_A, K3_B)


@pytest.fixture
def kronecker_3() -> SkewPencil:
    return build_kronecker_block(3)


@pytest.fixture
def jordan_2_4() -> SkewPencil:
    return build_jordan_block(ProjParam.finite(2), 2)


@pytest.fixture
def jordan_inf_4() -> SkewPencil:
    return build_jordan_block(INF, 2)


@pytest.fixture
def jordan_kronecker() -> SkewPencil:
    """J(2,4) + K(3): n = 9, core e7, e8, e9."""
    return direct_sum(build_jordan_block(ProjParam.finite(2), 2), build_kronecker_block(3))


def so3_bivector() -> PolyBivector:
    return PolyBivector.from_entries(3, {(0, 1): "x3", (1, 2): "x1", (0, 2): "-x2"})


def frozen_bivector() -> PolyBivector:
    """so(3) bracket frozen at a = (0, 0, 1)."""
    return PolyBivector.from_entries(3, {(0, 1): "1"})


@pytest.fixture
def so3_pair() -> PolyPencil:
    return PolyPencil.build(so3_bivector(), frozen_bivector())


@pytest.fixture
def plane_pencil() -> PolyPencil:
    """A = x1*J, B = J on QQ^2."""
    return PolyPencil.build(
        PolyBivector.from_entries(2, {(0, 1): "x1"}),
        PolyBivector.from_entries(2, {(0, 1): "1"}),
    )


@pytest.fixture
def k3_poisson(k3_pencil) -> PolyPencil:
    """The 5x5 example read as constant Poisson brackets."""
    return PolyPencil.build(PolyBivector.constant(k3_pencil.A), PolyBivector.constant(k3_pencil.B))


@pytest.fixture
def generic_points_3d() -> list[tuple[int, ...]]:
    return [(1, 2, 3), (2, -1, 1), (-3, 1, 2), (1, 1, -2), (4, -2, 3),
            (-1, -3, 2), (2, 5, -1), (3, 3, 1), (-2, 1, -4), (5, -1, 2)]


def random_skew(rng, n: int, bound: int = 3) -> RatMatrix:
    grid = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = Fraction(rng.randint(-bound, bound))
            grid[i][j], grid[j][i] = v, -v
    return RatMatrix.from_rows(grid, n)

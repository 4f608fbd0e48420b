from collections import Counter
from fractions import Fraction

import pytest

from jkpencil.cli.generate import corpus, ground_truth, parse_block_spec
from jkpencil.errors import StructuralError
from jkpencil.exactalg import RatMatrix, UniPoly, irreducible_factors, smith_form
from jkpencil.pencilcore import (
    INF,
    FactorClass,
    ProjParam,
    SkewPencil,
    build_jordan_block,
    build_kronecker_block,
    char_poly,
    congruence_transform,
    direct_sum,
    eigenvalue_set,
    is_eigenvalue,
    jk_invariants,
    jk_pattern,
    jordan_structure,
    kronecker_indices,
    make_invariants,
    pencil_rank,
    rebase,
    recursion_operator,
    regular_form,
)


def companion_pencil(corner_rows) -> SkewPencil:
    """[[0, X], [-X^T, 0]] against the standard symplectic form."""
    m = len(corner_rows)
    n = 2 * m
    a = [[0] * n for _ in range(n)]
    b = [[0] * n for _ in range(n)]
    for i in range(m):
        b[i][m + i], b[m + i][i] = 1, -1
        for j in range(m):
            a[i][m + j] = corner_rows[i][j]
            a[m + j][i] = -corner_rows[i][j]
    return SkewPencil.from_rows(a, b)


# construction

def test_pencil_rejects_non_skew():
    with pytest.raises(StructuralError):
        SkewPencil.from_rows([[0, 1], [1, 0]], [[0, 0], [0, 0]])


def test_pencil_rejects_size_mismatch():
    with pytest.raises(StructuralError):
        SkewPencil.from_rows([[0, 1], [-1, 0]], [[0]])


def test_kronecker_block_is_printed_example(kronecker_3, k3_pencil):
    assert kronecker_3 == k3_pencil


def test_kronecker_block_of_index_one_is_zero():
    assert build_kronecker_block(1) == SkewPencil.zero(1)


def test_block_builders_reject_bad_sizes():
    with pytest.raises(StructuralError):
        build_kronecker_block(0)
    with pytest.raises(StructuralError):
        build_jordan_block(ProjParam.finite(1), 0)


def test_jordan_block_at_infinity_has_degenerate_b():
    block = build_jordan_block(INF, 1)
    assert block.B == RatMatrix.zeros(2)
    assert block.A == RatMatrix.from_rows([[0, 1], [-1, 0]])


# rank and characteristic polynomial

def test_pencil_rank(k3_pencil, jordan_2_4, jordan_kronecker):
    assert pencil_rank(k3_pencil) == 4
    assert pencil_rank(jordan_2_4) == 4
    assert pencil_rank(jordan_kronecker) == 8
    assert pencil_rank(SkewPencil.zero(3)) == 0


def test_char_poly_jordan_block(jordan_2_4):
    cp = char_poly(jordan_2_4)
    assert str(cp) == "(l+2)^2"
    assert cp.singular_parameters() == [(Fraction(-2), 2)]


def test_char_poly_without_finite_eigenvalues(k3_pencil, jordan_inf_4):
    assert char_poly(k3_pencil).p == UniPoly.one()
    assert char_poly(jordan_inf_4).p == UniPoly.one()


def test_char_poly_ignores_kronecker_part(jordan_kronecker):
    assert str(char_poly(jordan_kronecker)) == "(l+2)^2"


# eigenvalues

def test_eigenvalue_set(k3_pencil, jordan_2_4, jordan_inf_4):
    assert eigenvalue_set(k3_pencil) == []
    assert eigenvalue_set(jordan_2_4) == [ProjParam.finite(2)]
    assert eigenvalue_set(jordan_inf_4) == [INF]


def test_eigenvalues_sorted_with_infinity_last():
    p = direct_sum(
        build_jordan_block(INF, 1),
        build_jordan_block(ProjParam.finite(3), 1),
        build_jordan_block(ProjParam.finite(Fraction(-1, 2)), 1),
    )
    assert eigenvalue_set(p) == [ProjParam.finite(Fraction(-1, 2)), ProjParam.finite(3), INF]


def test_irrational_eigenvalues_reported_as_factor_class():
    # A - c*B has corner X - cI, det = c^2 - c + 1
    p = companion_pencil([[1, 1], [-1, 0]])
    expected = FactorClass(UniPoly.parse("l^2 - l + 1"))
    assert eigenvalue_set(p) == [expected]
    assert jordan_structure(p) == {expected: (1,)}
    assert jk_invariants(p) == make_invariants(4, 4, (), {expected: (1,)})


def test_is_eigenvalue(jordan_2_4, jordan_inf_4):
    assert is_eigenvalue(jordan_2_4, ProjParam.finite(2))
    assert not is_eigenvalue(jordan_2_4, ProjParam.finite(-2))
    assert not is_eigenvalue(jordan_2_4, INF)
    assert is_eigenvalue(jordan_inf_4, INF)


# Jordan-Kronecker invariants

def test_invariants_of_printed_example(k3_pencil):
    inv = jk_invariants(k3_pencil)
    assert inv == make_invariants(5, 4, (3,), {})
    assert kronecker_indices(k3_pencil) == (3,)


def test_invariants_of_jordan_blocks(jordan_2_4, jordan_inf_4):
    assert jk_invariants(jordan_2_4) == make_invariants(4, 4, (), {ProjParam.finite(2): (2,)})
    assert jk_invariants(jordan_inf_4) == make_invariants(4, 4, (), {INF: (2,)})


def test_invariants_of_mixed_sum(jordan_kronecker):
    inv = jk_invariants(jordan_kronecker)
    assert inv.kronecker == (3,)
    assert inv.jordan_map == {ProjParam.finite(2): (2,)}
    assert inv.to_json() == {
        "n": 9,
        "rank": 8,
        "kronecker": [3],
        "jordan": [{"eig": "2", "halfsizes": [2]}],
    }


def test_repeated_eigenvalue_keeps_both_blocks():
    p = direct_sum(build_jordan_block(ProjParam.finite(1), 1), build_jordan_block(ProjParam.finite(1), 2))
    assert jordan_structure(p) == {ProjParam.finite(1): (1, 2)}


def test_several_kronecker_blocks():
    p = direct_sum(build_kronecker_block(1), build_kronecker_block(2), build_kronecker_block(2))
    assert kronecker_indices(p) == (1, 2, 2)
    assert pencil_rank(p) == 4


def test_ground_truth_matches_block_specs():
    specs = parse_block_spec("J:2:2,K:3,J:inf:1")
    inv = ground_truth(specs)
    assert inv.n == 4 + 5 + 2
    assert inv.kronecker == (3,)
    assert inv.jordan_map == {ProjParam.finite(2): (2,), INF: (1,)}


def test_congruence_fuzz_recovers_ground_truth():
    instances = corpus(200, seed=1)
    for inst in instances:
        # jk_invariants checks pairing of elementary divisors and block bookkeeping
        assert jk_invariants(inst.pencil) == inst.invariants, [str(s) for s in inst.specs]


def test_elementary_divisors_come_in_pairs():
    for inst in corpus(25, seed=2, max_n=8):
        counts = Counter()
        for d in smith_form(inst.pencil.poly_matrix()):
            for q, e in irreducible_factors(d):
                counts[(q, e)] += 1
        assert all(c % 2 == 0 for c in counts.values())


def test_congruence_rejects_singular_matrix(jordan_2_4):
    singular = RatMatrix.from_rows([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 1, 0]])
    with pytest.raises(StructuralError):
        congruence_transform(jordan_2_4, singular)
    with pytest.raises(StructuralError):
        congruence_transform(jordan_2_4, RatMatrix.identity(3))


def test_pattern_forgets_eigenvalue_values():
    two = jk_invariants(build_jordan_block(ProjParam.finite(2), 2))
    three = jk_invariants(build_jordan_block(ProjParam.finite(3), 2))
    infinite = jk_invariants(build_jordan_block(INF, 2))
    assert jk_pattern(two) == jk_pattern(three)
    assert jk_pattern(two) != jk_pattern(infinite)


# rebasing and recursion operator

def test_rebase_identity_and_swap(jordan_2_4):
    assert rebase(jordan_2_4, 1, 0, 0, 1) == jordan_2_4
    swapped = rebase(jordan_2_4, 0, 1, 1, 0)
    assert swapped == jordan_2_4.reversed()
    # B - c*A is singular at c = 1/2
    assert jordan_structure(swapped) == {ProjParam.finite(Fraction(1, 2)): (2,)}


def test_rebase_rejects_dependent_coefficients(jordan_2_4):
    with pytest.raises(StructuralError):
        rebase(jordan_2_4, 1, 2, 2, 4)


def test_recursion_operator_of_jordan_block(jordan_2_4):
    r = recursion_operator(jordan_2_4)
    shifted = r - RatMatrix.identity(4).scale(2)
    assert shifted != RatMatrix.zeros(4)
    assert shifted @ shifted == RatMatrix.zeros(4)


def test_recursion_operator_needs_nondegenerate_pencil(k3_pencil):
    with pytest.raises(StructuralError):
        recursion_operator(k3_pencil)


def test_regular_form(jordan_2_4, jordan_inf_4, k3_pencil):
    assert regular_form(jordan_2_4)[0] == INF
    param, form = regular_form(jordan_inf_4)
    assert param == ProjParam.finite(0)
    assert form == jordan_inf_4.A
    with pytest.raises(StructuralError):
        regular_form(k3_pencil)

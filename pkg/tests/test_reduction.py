from fractions import Fraction

import pytest

from jkpencil.cli.generate import corpus
from jkpencil.errors import PreconditionError, RationalEigenvalueRequired, StructuralError
from jkpencil.exactalg import kernel
from jkpencil.pencilcore import (
    INF,
    ProjParam,
    SkewPencil,
    build_jordan_block,
    direct_sum,
    eigenvalue_set,
    is_eigenvalue,
    jk_invariants,
    make_invariants,
    pencil_rank,
)
from jkpencil.reduction import (
    bi_poisson_reduce,
    bilagrangian_completion,
    eigenvector_heights,
    extension_step,
    obstruction_check,
    project_bilagrangian,
)
from jkpencil.subspaces import Subspace, core_subspace, is_bi_lagrangian, kernel_sum_subspace


def coords(n: int, *indices: int) -> Subspace:
    return Subspace.coordinate(n, (i - 1 for i in indices))


# reduction

def test_reduction_by_core_keeps_jordan_part():
    for inst in corpus(100, seed=3, max_n=10):
        reduction = bi_poisson_reduce(inst.pencil, core_subspace(inst.pencil))
        expected = inst.invariants
        jordan_dim = expected.n - sum(2 * k - 1 for k in expected.kronecker)
        assert reduction.reduced.n == jordan_dim
        inv = jk_invariants(reduction.reduced)
        assert inv.kronecker == ()
        assert inv.jordan == expected.jordan


def test_reduction_of_printed_example_is_zero(k3_pencil):
    reduction = bi_poisson_reduce(k3_pencil, core_subspace(k3_pencil))
    assert reduction.reduced.n == 0
    assert reduction.complement == coords(5, 3, 4, 5)


def test_reduction_by_eigenvector_line(jordan_2_4):
    reduction = bi_poisson_reduce(jordan_2_4, coords(4, 2))
    assert reduction.complement.dim == 3
    assert jk_invariants(reduction.reduced) == make_invariants(2, 2, (), {ProjParam.finite(2): (1,)})


def test_lift_and_project_vectors(jordan_2_4):
    reduction = bi_poisson_reduce(jordan_2_4, coords(4, 2))
    for i in range(reduction.reduced.n):
        y = tuple(Fraction(int(j == i)) for j in range(reduction.reduced.n))
        assert reduction.project_vector(reduction.lift_vector(y)) == y
    with pytest.raises(PreconditionError):
        reduction.project_vector((0, 0, 0, 1))


def test_reduction_rejects_non_admissible_subspace(jordan_2_4):
    with pytest.raises(PreconditionError):
        bi_poisson_reduce(jordan_2_4, coords(4, 1))


def test_reduction_rejects_non_isotropic_subspace(jordan_2_4):
    with pytest.raises(PreconditionError):
        bi_poisson_reduce(jordan_2_4, coords(4, 1, 3))


def test_projected_lagrangian_is_lagrangian(jordan_kronecker):
    core = core_subspace(jordan_kronecker)
    lagrangian = bilagrangian_completion(jordan_kronecker, core).result
    reduction = bi_poisson_reduce(jordan_kronecker, core)
    image = project_bilagrangian(reduction, lagrangian)
    assert is_bi_lagrangian(reduction.reduced, image)
    assert image.dim == 2


# eigenvector heights

def test_eigenvector_heights_of_jordan_block(jordan_2_4, unit):
    assert eigenvector_heights(jordan_2_4, ProjParam.finite(2)) == [(unit(4, 2), 2), (unit(4, 3), 2)]


def test_eigenvector_heights_mixed_sizes():
    pencil = direct_sum(build_jordan_block(ProjParam.finite(1), 1), build_jordan_block(ProjParam.finite(1), 2))
    heights = [h for _, h in eigenvector_heights(pencil, ProjParam.finite(1))]
    assert heights == [1, 1, 2, 2]


def test_eigenvector_heights_reject_non_eigenvalue(jordan_2_4, k3_pencil):
    with pytest.raises(PreconditionError):
        eigenvector_heights(jordan_2_4, ProjParam.finite(3))
    with pytest.raises(PreconditionError):
        eigenvector_heights(k3_pencil, ProjParam.finite(0))


# completion

def test_completion_trace_of_mixed_sum(jordan_kronecker, unit):
    trace = bilagrangian_completion(jordan_kronecker, core_subspace(jordan_kronecker))
    assert [(str(s.eigenvalue), s.height, s.reduced_dim) for s in trace.steps] == [("2", 2, 4), ("2", 1, 2)]
    assert [s.vector for s in trace.steps] == [unit(9, 2), unit(9, 1)]
    assert trace.result == coords(9, 1, 2, 7, 8, 9)
    assert trace.to_json()["dim"] == 5


def test_completion_is_a_fixpoint(jordan_kronecker):
    first = bilagrangian_completion(jordan_kronecker, core_subspace(jordan_kronecker))
    again = bilagrangian_completion(jordan_kronecker, first.result)
    assert again.steps == ()
    assert again.result == first.result
    assert extension_step(jordan_kronecker, first.result) is None


def test_completion_of_printed_example_needs_no_steps(k3_pencil):
    trace = bilagrangian_completion(k3_pencil, core_subspace(k3_pencil))
    assert trace.steps == ()
    assert trace.result == coords(5, 3, 4, 5)


def test_completion_over_corpus():
    for inst in corpus(30, seed=4, max_n=10):
        pencil = inst.pencil
        trace = bilagrangian_completion(pencil, core_subspace(pencil))
        assert trace.result.dim == pencil.n - pencil_rank(pencil) // 2
        assert is_bi_lagrangian(pencil, trace.result)
        assert core_subspace(pencil) <= trace.result
        assert bilagrangian_completion(pencil, trace.result).steps == ()


def test_completion_preconditions(k3_pencil, jordan_2_4):
    with pytest.raises(PreconditionError):
        bilagrangian_completion(k3_pencil, Subspace.zero(5))
    with pytest.raises(PreconditionError):
        bilagrangian_completion(jordan_2_4, coords(4, 1, 3))
    with pytest.raises(PreconditionError):
        bilagrangian_completion(jordan_2_4, coords(4, 1))


def test_completion_needs_rational_eigenvalues():
    pencil = SkewPencil.from_rows(
        [[0, 0, 0, 1], [0, 0, -1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]],
        [[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]],
    )
    with pytest.raises(RationalEigenvalueRequired):
        bilagrangian_completion(pencil, Subspace.zero(4))


def test_completion_at_infinity(jordan_inf_4):
    trace = bilagrangian_completion(jordan_inf_4, Subspace.zero(4))
    assert [s.eigenvalue for s in trace.steps] == [INF, INF]
    assert trace.result.dim == 2


# obstruction

def test_obstruction_fails_for_printed_example(k3_pencil, unit):
    report = obstruction_check(k3_pencil, unit(5, 4))
    assert not report.passed
    assert not report.regular_consensus
    verdicts = {str(s.param): s.in_image for s in report.samples}
    assert verdicts == {"0": True, "1": False, "2": False, "inf": True}
    assert report.to_json()["verdict"] == "FAIL"


def test_obstruction_passes_inside_common_image(k3_pencil, unit):
    report = obstruction_check(k3_pencil, unit(5, 1))
    assert report.passed
    assert report.regular_consensus
    assert all(s.in_image for s in report.samples)


def test_obstruction_passes_for_nondegenerate_pencil(jordan_2_4):
    report = obstruction_check(jordan_2_4, (1, 2, 3, 4))
    assert report.passed
    # l = -2 is not sampled; every sample is regular
    assert all(s.regular for s in report.samples)


def test_obstruction_marks_singular_samples(unit):
    pencil = build_jordan_block(ProjParam.finite(-1), 1)
    report = obstruction_check(pencil, unit(2, 1))
    regular = {str(s.param): s.regular for s in report.samples}
    assert regular == {"0": True, "1": False, "2": True, "inf": True}
    assert report.passed


def test_obstruction_rejects_wrong_length(k3_pencil):
    with pytest.raises(StructuralError):
        obstruction_check(k3_pencil, (1, 0))


def test_completion_of_small_jordan_block(unit):
    pencil = build_jordan_block(ProjParam.finite(2), 1)
    trace = bilagrangian_completion(pencil, Subspace.zero(2))
    assert len(trace.steps) == 1
    assert trace.result == Subspace.span(2, [unit(2, 1)])


def test_obstruction_of_zero_vector(k3_pencil):
    assert obstruction_check(k3_pencil, (0, 0, 0, 0, 0)).passed


def test_obstruction_fails_at_regular_samples(k3_pencil, unit):
    params = [ProjParam.finite(t) for t in (1, 2, 3)]
    report = obstruction_check(k3_pencil, unit(5, 4), params)
    assert not any(s.in_image for s in report.samples)


def _kernel_sum_pairs(pencil):
    """One kernel vector outside the core per finite eigenvalue c, at the parameter -c."""
    core = core_subspace(pencil)
    pairs = []
    for eig in eigenvalue_set(pencil):
        if not isinstance(eig, ProjParam) or eig.is_infinite:
            continue
        param = eig.negated()
        extra = next((v for v in kernel(pencil.at(param)) if not core.contains(v)), None)
        if extra is not None:
            pairs.append((param, extra))
    return pairs


def test_reduction_by_kernel_sums():
    for inst in corpus(100, seed=6, max_n=10):
        pencil = inst.pencil
        u = kernel_sum_subspace(pencil, _kernel_sum_pairs(pencil))
        reduction = bi_poisson_reduce(pencil, u)
        assert (reduction.complement.dim - u.dim) % 2 == 0
        assert pencil_rank(reduction.reduced) == reduction.reduced.n
        for eig in eigenvalue_set(reduction.reduced):
            if isinstance(eig, ProjParam):
                assert is_eigenvalue(pencil, eig)
        lagrangian = bilagrangian_completion(pencil, u).result
        assert is_bi_lagrangian(reduction.reduced, project_bilagrangian(reduction, lagrangian))

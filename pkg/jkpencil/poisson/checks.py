"""
Symbolic and pointwise verification of integrability data on a Poisson pencil.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Sequence, TypeVar

from jkpencil.errors import JKPencilError, PreconditionError
from jkpencil.exactalg import MultiPoly, as_rational, format_rational, rank, solve
from jkpencil.pencilcore import ProjParam, char_poly, eigenvalue_set, pencil_rank
from jkpencil.poisson.families import BiHamSystem, FunctionFamily
from jkpencil.poisson.pencil import (
    PolyPencil,
    bracket_fn,
    eval_at,
    hamiltonian_field,
    is_casimir,
    jk_regularity_probe,
)
from jkpencil.reduction import bilagrangian_completion, obstruction_check
from jkpencil.subspaces import Subspace, core_subspace, is_admissible, is_bi_isotropic, is_bi_lagrangian

logger = logging.getLogger(__name__)

T = TypeVar("T")
Point = tuple[Fraction, ...]


def map_points(fn: Callable[[Point], T], points: Sequence[Sequence], workers: int = 1) -> list[T]:
    """Apply fn to each point; results keep the order of ``points``."""
    normalized = [tuple(as_rational(v) for v in p) for p in points]
    if workers <= 1 or len(normalized) <= 1:
        return [fn(p) for p in normalized]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, normalized))


def point_json(point: Point) -> list[str]:
    return [format_rational(a) for a in point]


def differential_at(f: MultiPoly, point: Point) -> tuple[Fraction, ...]:
    return tuple(g.evaluate(point) for g in f.gradient())


# eigenvalue fields

@dataclass(frozen=True)
class EigenDiffReport:
    field_: MultiPoly
    symbolic: bool
    points: tuple[tuple[Point, bool], ...] = ()

    @property
    def passed(self) -> bool:
        return self.symbolic or all(ok for _, ok in self.points)

    def to_json(self) -> dict:
        return {
            "field": str(self.field_),
            "passed": self.passed,
            "symbolic": self.symbolic,
            "points": [{"point": point_json(p), "passed": ok} for p, ok in self.points],
        }


def check_eigendiff(pencil: PolyPencil, eigen_field: MultiPoly, points: Sequence[Sequence], workers: int = 1) -> EigenDiffReport:
    """(A - l(x) B) d l(x) = 0 for a claimed eigenvalue field l(x)."""
    d = eigen_field.gradient()
    a_part = pencil.A.apply(d)
    b_part = pencil.B.apply(d)
    residual = tuple(a - eigen_field * b for a, b in zip(a_part, b_part))
    symbolic = all(c.is_zero for c in residual)

    def at_point(x: Point) -> tuple[Point, bool]:
        fibre = eval_at(pencil, x)
        value = eigen_field.evaluate(x)
        if rank(fibre.shifted(value)) >= pencil_rank(fibre):
            raise PreconditionError(f"{eigen_field} is not an eigenvalue at x = {point_json(x)}")
        return x, all(c.evaluate(x) == 0 for c in residual)

    results = map_points(at_point, points, workers)
    return EigenDiffReport(field_=eigen_field, symbolic=symbolic, points=tuple(results))


# bi-involution

@dataclass(frozen=True)
class BracketFailure:
    first: str
    second: str
    bracket: str
    value: MultiPoly

    def to_json(self) -> dict:
        return {"f": self.first, "g": self.second, "bracket": self.bracket, "value": str(self.value)}


@dataclass(frozen=True)
class BiInvolutionReport:
    failures: tuple[BracketFailure, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"passed": self.passed, "failures": [f.to_json() for f in self.failures]}


def bi_involution_check(pencil: PolyPencil, family: FunctionFamily) -> BiInvolutionReport:
    failures = []
    for f, g in combinations(family.members, 2):
        value = bracket_fn(pencil, f.function, g.function)
        if not value.a_part.is_zero:
            failures.append(BracketFailure(f.name, g.name, "A", value.a_part))
        if not value.b_part.is_zero:
            failures.append(BracketFailure(f.name, g.name, "B", value.b_part))
    return BiInvolutionReport(tuple(failures))


# completeness

@dataclass(frozen=True)
class PointCompleteness:
    point: Point
    pencil_rank: int
    expected: int
    span_dim: int
    independent: bool
    bi_lagrangian: bool

    @property
    def complete(self) -> bool:
        return self.span_dim == self.expected and self.bi_lagrangian

    def to_json(self) -> dict:
        return {
            "point": point_json(self.point),
            "rank": self.pencil_rank,
            "N": self.expected,
            "span_dim": self.span_dim,
            "independent": self.independent,
            "bi_lagrangian": self.bi_lagrangian,
            "complete": self.complete,
        }


@dataclass(frozen=True)
class CompletenessReport:
    points: tuple[PointCompleteness, ...] = ()

    @property
    def complete(self) -> bool:
        return bool(self.points) and all(p.complete for p in self.points)

    def to_json(self) -> dict:
        return {"complete": self.complete, "points": [p.to_json() for p in self.points]}


def span_of_differentials(family: FunctionFamily, point: Point) -> Subspace:
    return Subspace.span(family.n, (differential_at(f, point) for f in family.functions))


def completeness_check(
    pencil: PolyPencil, family: FunctionFamily, points: Sequence[Sequence], workers: int = 1,
) -> CompletenessReport:
    def at_point(x: Point) -> PointCompleteness:
        fibre = eval_at(pencil, x)
        r = pencil_rank(fibre)
        span = span_of_differentials(family, x)
        return PointCompleteness(
            point=x,
            pencil_rank=r,
            expected=pencil.n - r // 2,
            span_dim=span.dim,
            independent=span.dim == len(family),
            bi_lagrangian=is_bi_lagrangian(fibre, span),
        )

    return CompletenessReport(tuple(map_points(at_point, points, workers)))


# bi-Hamiltonian fields

@dataclass(frozen=True)
class SolvabilityProbe:
    param: ProjParam
    point: Point
    solvable: bool

    def to_json(self) -> dict:
        return {"lambda": str(self.param), "point": point_json(self.point), "solvable": self.solvable}


@dataclass(frozen=True)
class BiHamiltonianReport:
    stored: tuple[tuple[ProjParam, bool], ...]
    probes: tuple[SolvabilityProbe, ...] = ()
    obstruction: tuple[tuple[Point, bool], ...] = ()
    first_integrals: tuple[tuple[str, bool], ...] = ()

    @property
    def hamiltonian_for_all_probes(self) -> bool:
        return all(p.solvable for p in self.probes)

    @property
    def passed(self) -> bool:
        return (all(ok for _, ok in self.stored) and self.hamiltonian_for_all_probes
                and all(ok for _, ok in self.obstruction) and all(ok for _, ok in self.first_integrals))

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "stored": [{"alpha": str(a), "valid": ok} for a, ok in self.stored],
            "probes": [p.to_json() for p in self.probes],
            "bi_hamiltonian_probe": self.hamiltonian_for_all_probes,
            "obstruction": [{"point": point_json(x), "passed": ok} for x, ok in self.obstruction],
            "first_integrals": [{"name": name, "passed": ok} for name, ok in self.first_integrals],
        }


def bihamiltonian_check(
    pencil: PolyPencil,
    system: BiHamSystem,
    extra_params: Sequence[ProjParam],
    points: Sequence[Sequence],
    integrals: FunctionFamily | None = None,
    workers: int = 1,
) -> BiHamiltonianReport:
    stored = tuple(
        (alpha, all((a - b).is_zero for a, b in zip(hamiltonian_field(pencil, h, alpha), system.v)))
        for alpha, h in system.hamiltonians
    )

    def at_point(x: Point):
        fibre = eval_at(pencil, x)
        v = system.at(x)
        probes = [SolvabilityProbe(p, x, solve(fibre.at(p), v) is not None) for p in extra_params]
        return probes, (x, obstruction_check(fibre, v).passed)

    per_point = map_points(at_point, points, workers)
    integrals_ok = ()
    if integrals is not None:
        integrals_ok = tuple((m.name, system.apply(m.function).is_zero) for m in integrals.members)
    return BiHamiltonianReport(
        stored=stored,
        probes=tuple(p for probes, _ in per_point for p in probes),
        obstruction=tuple(o for _, o in per_point),
        first_integrals=integrals_ok,
    )


@dataclass(frozen=True)
class TwoBracketReport:
    points: tuple[tuple[Point, bool], ...] = ()

    @property
    def necessary_condition_holds(self) -> bool:
        return all(ok for _, ok in self.points)

    def to_json(self) -> dict:
        return {
            "necessary_condition_holds": self.necessary_condition_holds,
            "points": [{"point": point_json(x), "passed": ok} for x, ok in self.points],
        }


def two_bracket_report(
    pencil: PolyPencil, f: MultiPoly, g: MultiPoly, points: Sequence[Sequence], workers: int = 1,
) -> TwoBracketReport:
    """For v = A df = B dg, run the image obstruction at sample points."""
    v = hamiltonian_field(pencil, f, ProjParam.finite(0))
    w = hamiltonian_field(pencil, g, ProjParam.infinity())
    if any(not (a - b).is_zero for a, b in zip(v, w)):
        raise PreconditionError("A df and B dg differ")

    def at_point(x: Point):
        return x, obstruction_check(eval_at(pencil, x), tuple(c.evaluate(x) for c in v)).passed

    return TwoBracketReport(tuple(map_points(at_point, points, workers)))


# standard integrals

@dataclass(frozen=True)
class MemberValidation:
    name: str
    role: str
    passed: bool
    message: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "role": self.role, "passed": self.passed, "message": self.message}


@dataclass(frozen=True)
class PointReport:
    point: Point
    core_covered: bool
    finite_eigenvalues: bool
    admissible: bool
    bi_isotropic: bool
    probe_passed: bool
    span_dim: int
    expected: int
    char_poly: str = "1"
    char_poly_degree: int = 0
    completion_dim: int | None = None
    completion_steps: int | None = None
    message: str = ""

    @property
    def complete(self) -> bool:
        return self.span_dim == self.expected and self.bi_isotropic

    def to_json(self) -> dict:
        return {
            "point": point_json(self.point),
            "core_covered": self.core_covered,
            "finite_eigenvalues": self.finite_eigenvalues,
            "admissible": self.admissible,
            "bi_isotropic": self.bi_isotropic,
            "probe_passed": self.probe_passed,
            "span_dim": self.span_dim,
            "N": self.expected,
            "complete": self.complete,
            "char_poly": self.char_poly,
            "completion_dim": self.completion_dim,
            "completion_steps": self.completion_steps,
            "message": self.message,
        }


@dataclass(frozen=True)
class StandardIntegralsReport:
    members: tuple[MemberValidation, ...]
    bi_involution: BiInvolutionReport
    points: tuple[PointReport, ...] = field(default=())

    @property
    def char_poly_consistent(self) -> bool:
        return len({p.char_poly_degree for p in self.points}) <= 1

    @property
    def passed(self) -> bool:
        return all(m.passed for m in self.members) and self.bi_involution.passed and all(
            p.core_covered and p.admissible and p.finite_eigenvalues for p in self.points)

    @property
    def complete(self) -> bool:
        return bool(self.points) and all(p.complete for p in self.points)

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "complete": self.complete,
            "members": [m.to_json() for m in self.members],
            "bi_involution": self.bi_involution.to_json(),
            "char_poly_consistent": self.char_poly_consistent,
            "points": [p.to_json() for p in self.points],
        }


def _validate_member(pencil: PolyPencil, member, system: BiHamSystem | None, points: Sequence[Point]) -> MemberValidation:
    role = member.role
    f = member.function
    try:
        if role.kind == "casimir":
            ok = is_casimir(pencil, f, role.param)
            message = "" if ok else f"not a Casimir of the bracket at l = {role.param}"
        elif role.kind == "eigenvalue":
            ok = check_eigendiff(pencil, f, points).passed
            message = "" if ok else "eigenvalue differential identity fails"
        elif role.kind == "hamiltonian":
            if system is None:
                return MemberValidation(member.name, str(role), False, "no vector field supplied")
            field_ = hamiltonian_field(pencil, f, role.param)
            ok = all((a - b).is_zero for a, b in zip(field_, system.v))
            message = "" if ok else f"A_{role.param} dH differs from v"
        else:
            ok, message = True, ""
    except PreconditionError as exc:
        ok, message = False, str(exc)
    return MemberValidation(member.name, str(role), ok, message)


def standard_integrals_report(
    pencil: PolyPencil,
    system: BiHamSystem | None,
    family: FunctionFamily,
    points: Sequence[Sequence],
    complete: bool = False,
    perturbations: int = 6,
    workers: int = 1,
) -> StandardIntegralsReport:
    normalized = [tuple(as_rational(v) for v in p) for p in points]
    members = tuple(_validate_member(pencil, m, system, normalized) for m in family.members)
    involution = bi_involution_check(pencil, family)

    def at_point(x: Point) -> PointReport:
        fibre = eval_at(pencil, x)
        r = pencil_rank(fibre)
        cp = char_poly(fibre, r)
        span = span_of_differentials(family, x)
        core = core_subspace(fibre)
        isotropic = is_bi_isotropic(fibre, span)
        admissible = is_admissible(fibre, span).admissible
        finite = all(not (isinstance(e, ProjParam) and e.is_infinite) for e in eigenvalue_set(fibre))
        probe = jk_regularity_probe(pencil, x, perturbations)
        report = dict(
            point=x,
            core_covered=core <= span,
            finite_eigenvalues=finite,
            admissible=admissible,
            bi_isotropic=isotropic,
            probe_passed=probe.stable,
            span_dim=span.dim,
            expected=pencil.n - r // 2,
            char_poly=str(cp),
            char_poly_degree=cp.p.degree,
        )
        if complete and isotropic and admissible and core <= span:
            try:
                trace = bilagrangian_completion(fibre, span)
                report.update(completion_dim=trace.result.dim, completion_steps=len(trace.steps))
            except JKPencilError as exc:
                report.update(message=str(exc))
        elif complete:
            report.update(message="completion needs a bi-isotropic admissible span containing the core")
        return PointReport(**report)

    results = tuple(map_points(at_point, normalized, workers))
    report = StandardIntegralsReport(members=members, bi_involution=involution, points=results)
    if not report.char_poly_consistent:
        logger.warning("fibrewise characteristic polynomial changes degree across sample points")
    return report

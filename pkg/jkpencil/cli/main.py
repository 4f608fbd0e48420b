"""
Command-line entry point: ``jkpencil <command> [options]``.

Every command builds a JSON report; ``--format text`` renders the same
report for the console. Exit codes: 0 success, 1 internal inconsistency,
2 input error, 3 structural violation, 4 failed precondition or check.
"""

import argparse
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable

from pydantic import ValidationError

from jkpencil import __version__
from jkpencil.cli.generate import generate_instance, parse_block_spec, random_points
from jkpencil.cli.io import (
    FamilyFile,
    PencilFile,
    PoissonPencilFile,
    SubspaceFile,
    SystemFile,
    VectorFile,
    dump_json,
    load_model,
    parse_params,
    parse_points,
)
from jkpencil.cli.render import make_renderer
from jkpencil.config import Settings, load_settings
from jkpencil.errors import EXIT_CODES, JKPencilError
from jkpencil.exactalg import MultiPoly
from jkpencil.pencilcore import ProjParam, SkewPencil, char_poly, eigen_to_json, eigenvalue_set, jk_invariants
from jkpencil.poisson import (
    Guardrails,
    PolyPencil,
    bi_involution_check,
    bihamiltonian_check,
    casimir_shift,
    check_eigendiff,
    completeness_check,
    hamiltonian_field,
    is_compatible,
    is_poisson,
    schouten_bracket,
    standard_integrals_report,
    two_bracket_report,
)
from jkpencil.reduction import bi_poisson_reduce, bilagrangian_completion, obstruction_check
from jkpencil.subspaces import annihilator_checks, core_subspace, is_admissible, mantle_subspace

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CommandResult:
    title: str
    report: dict[str, Any]
    passed: bool | None = None


# settings and logging

def configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else logging.WARNING
    try:
        from rich.console import Console
        from rich.logging import RichHandler
        handler: logging.Handler = RichHandler(console=Console(stderr=True), show_path=False)
        fmt = "%(message)s"
    except ImportError:
        handler = logging.StreamHandler(sys.stderr)
        fmt = "%(levelname)s %(name)s: %(message)s"
    logging.basicConfig(level=level, format=fmt, handlers=[handler], force=True)


def resolve_settings(args: argparse.Namespace) -> Settings:
    """Config file and environment first, then command-line overrides."""
    settings = load_settings(args.config)
    sampling = {}
    if args.seed is not None:
        sampling["seed"] = args.seed
    if args.points is not None and args.points.strip().isdigit():
        sampling["points"] = int(args.points)
    guardrails = {}
    if args.max_degree is not None:
        guardrails["max_degree"] = args.max_degree
    if args.max_dim is not None:
        guardrails["max_dim"] = args.max_dim
    output = {"format": args.format} if args.format is not None else {}
    concurrency = {"workers": args.workers} if args.workers is not None else {}
    return settings.model_copy(update={
        "sampling": settings.sampling.model_copy(update=sampling),
        "guardrails": settings.guardrails.model_copy(update=guardrails),
        "output": settings.output.model_copy(update=output),
        "concurrency": settings.concurrency.model_copy(update=concurrency),
    })


def guardrails_of(settings: Settings) -> Guardrails:
    return Guardrails(max_degree=settings.guardrails.max_degree, max_dim=settings.guardrails.max_dim)


def sample_points(args: argparse.Namespace, settings: Settings, n: int) -> list[tuple]:
    """Explicit ``--points 'x;y'`` or a seeded batch of ``sampling.points`` points."""
    if args.points is not None and not args.points.strip().isdigit():
        return parse_points(args.points, n)
    return random_points(n, settings.sampling.points, settings.sampling.seed, settings.sampling.coordinate_range)


# linear-algebra commands

def _pencil(args) -> SkewPencil:
    return load_model(args.pencil, PencilFile).to_pencil()


def cmd_invariants(args, settings: Settings) -> CommandResult:
    pencil = _pencil(args)
    inv = jk_invariants(pencil)
    report = inv.to_json()
    report["charpoly"] = str(char_poly(pencil, inv.rank))
    report["eigenvalues"] = [eigen_to_json(e) for e in eigenvalue_set(pencil)]
    return CommandResult("invariants", report)


def cmd_core(args, settings: Settings) -> CommandResult:
    return CommandResult("core", core_subspace(_pencil(args)).to_json())


def cmd_mantle(args, settings: Settings) -> CommandResult:
    return CommandResult("mantle", mantle_subspace(_pencil(args)).to_json())


def cmd_admissible(args, settings: Settings) -> CommandResult:
    report = is_admissible(_pencil(args), load_model(args.subspace, SubspaceFile).to_subspace())
    return CommandResult("admissible", report.to_json(), report.admissible)


def cmd_annihilators(args, settings: Settings) -> CommandResult:
    pencil = _pencil(args)
    lagrangian = load_model(args.lagrangian, SubspaceFile).to_subspace() if args.lagrangian else None
    report = annihilator_checks(pencil, lagrangian)
    return CommandResult("annihilators", report.to_json(), report.passed)


def cmd_reduce(args, settings: Settings) -> CommandResult:
    reduced = bi_poisson_reduce(_pencil(args), load_model(args.subspace, SubspaceFile).to_subspace())
    return CommandResult("reduce", reduced.to_json())


def cmd_complete(args, settings: Settings) -> CommandResult:
    pencil = _pencil(args)
    start = load_model(args.start, SubspaceFile).to_subspace() if args.start else core_subspace(pencil)
    return CommandResult("complete", bilagrangian_completion(pencil, start).to_json())


def cmd_obstruct(args, settings: Settings) -> CommandResult:
    pencil = _pencil(args)
    vector = load_model(args.vector, VectorFile).to_vector()
    if args.lambdas:
        report = obstruction_check(pencil, vector, parse_params(args.lambdas))
    else:
        report = obstruction_check(pencil, vector)
    return CommandResult("obstruct", report.to_json(), report.passed)


def cmd_gen(args, settings: Settings) -> CommandResult:
    seed = args.congruence_seed if args.congruence_seed is not None else settings.sampling.seed
    instance = generate_instance(parse_block_spec(args.blocks), seed, identity=args.identity)
    payload = instance.to_json()
    if args.output:
        Path(args.output).write_text(dump_json(payload, settings.output.indent) + "\n", encoding="utf-8")
        return CommandResult("gen", {"output": args.output, "invariants": payload["invariants"]})
    return CommandResult("gen", payload)


# poisson commands

def _poisson_pencil(args, settings: Settings, verify: bool = True) -> PolyPencil:
    a, b = load_model(args.pencil, PoissonPencilFile).to_bivectors()
    if verify:
        return PolyPencil.build(a, b, guardrails_of(settings))
    return PolyPencil(a, b)


def cmd_poisson_check(args, settings: Settings) -> CommandResult:
    a, b = load_model(args.pencil, PoissonPencilFile).to_bivectors()
    guard = guardrails_of(settings)
    report = {
        "A_poisson": is_poisson(a, guard),
        "B_poisson": is_poisson(b, guard),
        "compatible": is_compatible(a, b, guard),
    }
    passed = all(report.values())
    report = {"passed": passed, **report}
    return CommandResult("poisson check", report, passed)


def cmd_poisson_compat(args, settings: Settings) -> CommandResult:
    a, b = load_model(args.pencil, PoissonPencilFile).to_bivectors()
    trivector = schouten_bracket(a, b, guardrails_of(settings))
    compatible = trivector.is_zero()
    return CommandResult("poisson compat", {"compatible": compatible, "witness": trivector.to_json()}, compatible)


def cmd_poisson_casimir(args, settings: Settings) -> CommandResult:
    pencil = _poisson_pencil(args, settings, verify=False)
    f = MultiPoly.parse(args.function, pencil.n)
    if args.shift:
        shifted = casimir_shift(pencil, f, guardrails_of(settings))
        return CommandResult("casimir shift", {"function": str(f), "shifted": shifted.to_json()})
    alpha = ProjParam.parse(args.alpha)
    field_ = hamiltonian_field(pencil, f, alpha)
    casimir = all(c.is_zero for c in field_)
    report = {
        "function": str(f),
        "alpha": str(alpha),
        "casimir": casimir,
        "witness": None if casimir else [str(c) for c in field_],
    }
    return CommandResult("casimir", report, casimir)


def cmd_poisson_bi_involution(args, settings: Settings) -> CommandResult:
    pencil = _poisson_pencil(args, settings)
    report = bi_involution_check(pencil, load_model(args.family, FamilyFile).to_family())
    return CommandResult("bi-involution", report.to_json(), report.passed)


def cmd_poisson_completeness(args, settings: Settings) -> CommandResult:
    pencil = _poisson_pencil(args, settings)
    family = load_model(args.family, FamilyFile).to_family()
    report = completeness_check(pencil, family, sample_points(args, settings, pencil.n),
                                settings.concurrency.workers)
    return CommandResult("completeness", report.to_json(), report.complete)


def cmd_poisson_eigendiff(args, settings: Settings) -> CommandResult:
    pencil = _poisson_pencil(args, settings)
    field_ = MultiPoly.parse(args.field, pencil.n)
    report = check_eigendiff(pencil, field_, sample_points(args, settings, pencil.n), settings.concurrency.workers)
    return CommandResult("eigendiff", report.to_json(), report.passed)


def cmd_poisson_bihamiltonian(args, settings: Settings) -> CommandResult:
    pencil = _poisson_pencil(args, settings)
    system = load_model(args.system, SystemFile).to_system(pencil)
    integrals = load_model(args.family, FamilyFile).to_family() if args.family else None
    report = bihamiltonian_check(
        pencil, system, parse_params(args.lambdas or ["1"]), sample_points(args, settings, pencil.n),
        integrals, settings.concurrency.workers,
    )
    return CommandResult("bi-hamiltonian", report.to_json(), report.passed)


def cmd_poisson_two_bracket(args, settings: Settings) -> CommandResult:
    pencil = _poisson_pencil(args, settings)
    f, g = MultiPoly.parse(args.f, pencil.n), MultiPoly.parse(args.g, pencil.n)
    report = two_bracket_report(pencil, f, g, sample_points(args, settings, pencil.n), settings.concurrency.workers)
    return CommandResult("two-bracket", report.to_json(), report.necessary_condition_holds)


def cmd_poisson_standard_report(args, settings: Settings) -> CommandResult:
    pencil = _poisson_pencil(args, settings)
    family = load_model(args.family, FamilyFile).to_family()
    system = load_model(args.system, SystemFile).to_system(pencil) if args.system else None
    report = standard_integrals_report(
        pencil, system, family, sample_points(args, settings, pencil.n),
        complete=args.complete,
        perturbations=settings.sampling.perturbations,
        workers=settings.concurrency.workers,
    )
    return CommandResult("standard report", report.to_json(), report.passed)


# parser

def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=None, help="Path to config.yaml.")
    common.add_argument("--seed", type=int, default=None, help="Seed for generated points and instances.")
    common.add_argument("--points", default=None,
                        help="Number of generated sample points, or explicit points '1,2,3;0,1,2'.")
    common.add_argument("--format", choices=["json", "text"], default=None, help="Report format.")
    common.add_argument("--max-degree", type=int, default=None, help="Degree guardrail for Schouten checks.")
    common.add_argument("--max-dim", type=int, default=None, help="Dimension guardrail for Schouten checks.")
    common.add_argument("--workers", type=int, default=None, help="Threads for per-point evaluation.")
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr.")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(prog="jkpencil", description="Exact analysis of skew and Poisson pencils.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    def command(sub, name: str, handler: Callable, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(handler=handler)
        return p

    p = command(commands, "invariants", cmd_invariants, "Rank, characteristic polynomial and JK invariants.")
    p.add_argument("pencil")
    p = command(commands, "core", cmd_core, "Core subspace.")
    p.add_argument("pencil")
    p = command(commands, "mantle", cmd_mantle, "Mantle subspace.")
    p.add_argument("pencil")
    p = command(commands, "admissible", cmd_admissible, "Admissibility of a subspace.")
    p.add_argument("pencil")
    p.add_argument("subspace")
    p = command(commands, "annihilators", cmd_annihilators, "Core annihilator and common image checks.")
    p.add_argument("pencil")
    p.add_argument("--lagrangian", default=None, help="Bi-Lagrangian subspace file.")
    p = command(commands, "reduce", cmd_reduce, "Bi-Poisson reduction by an admissible bi-isotropic subspace.")
    p.add_argument("pencil")
    p.add_argument("subspace")
    p = command(commands, "complete", cmd_complete, "Complete a subspace to a bi-Lagrangian one.")
    p.add_argument("pencil")
    p.add_argument("--start", default=None, help="Starting subspace file; the core by default.")
    p = command(commands, "obstruct", cmd_obstruct, "Check v in Im(A + l B) for all l.")
    p.add_argument("pencil")
    p.add_argument("vector")
    p.add_argument("--lambda", dest="lambdas", nargs="+", default=None, help="Diagnostic parameters.")
    p = command(commands, "gen", cmd_gen, "Generate a congruent copy of a canonical direct sum.")
    p.add_argument("--blocks", required=True, help="Block spec, e.g. 'J:2:4,K:3'.")
    p.add_argument("--congruence-seed", type=int, default=None)
    p.add_argument("--identity", action="store_true", help="Skip the random congruence.")
    p.add_argument("--output", default=None, help="Write the pencil file here instead of stdout.")

    poisson = commands.add_parser("poisson", help="Polynomial Poisson pencils.")
    sub = poisson.add_subparsers(dest="poisson_command", required=True)
    p = command(sub, "check", cmd_poisson_check, "Jacobi identities and compatibility.")
    p.add_argument("pencil")
    p = command(sub, "compat", cmd_poisson_compat, "Schouten bracket of A and B.")
    p.add_argument("pencil")
    p = command(sub, "casimir", cmd_poisson_casimir, "Casimir test or Casimir shift A + fB.")
    p.add_argument("pencil")
    p.add_argument("--function", required=True)
    p.add_argument("--alpha", default="0", help="Bracket A + alpha B to test against ('inf' for B).")
    p.add_argument("--shift", action="store_true", help="Build A + fB for a common Casimir f.")
    p = command(sub, "bi-involution", cmd_poisson_bi_involution, "Pairwise brackets of a family.")
    p.add_argument("pencil")
    p.add_argument("family")
    p = command(sub, "completeness", cmd_poisson_completeness, "Completeness of a family at sample points.")
    p.add_argument("pencil")
    p.add_argument("family")
    p = command(sub, "eigendiff", cmd_poisson_eigendiff, "Eigenvalue-field differential identity.")
    p.add_argument("pencil")
    p.add_argument("--field", required=True)
    p = command(sub, "bihamiltonian", cmd_poisson_bihamiltonian, "Stored Hamiltonians and solvability probes.")
    p.add_argument("pencil")
    p.add_argument("system")
    p.add_argument("--family", default=None, help="Candidate first integrals.")
    p.add_argument("--lambda", dest="lambdas", nargs="+", default=None)
    p = command(sub, "two-bracket", cmd_poisson_two_bracket, "Image condition for v = A df = B dg.")
    p.add_argument("pencil")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p = command(sub, "standard-report", cmd_poisson_standard_report, "Standard integrals at sample points.")
    p.add_argument("pencil")
    p.add_argument("family")
    p.add_argument("--system", default=None)
    p.add_argument("--complete", action="store_true", help="Run the bi-Lagrangian completion at each point.")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        settings = resolve_settings(args)
        result = args.handler(args, settings)
    except (FileNotFoundError, ValidationError) as exc:
        print(f"jkpencil: error: {exc}", file=sys.stderr)
        return EXIT_CODES["input"]
    except JKPencilError as exc:
        print(f"jkpencil: error: {exc}", file=sys.stderr)
        return exc.exit_code

    renderer = make_renderer(settings.output.format, settings.output.use_rich, settings.output.indent)
    renderer.render(result.title, result.report)
    if result.passed is False:
        return EXIT_CODES["check_failed"]
    return EXIT_CODES["ok"]


if __name__ == "__main__":
    sys.exit(main())

"""
JSON file formats read by the command line, validated with pydantic.

Scalars are JSON integers or rational strings ("p/q"); polynomials are
strings in x1..xn; parameters are rational strings or "inf".
"""

import json
import re
from pathlib import Path
from typing import Any, Sequence, TypeVar, Union

from pydantic import BaseModel, ConfigDict, Field, StrictInt, ValidationError

from jkpencil.errors import InputError
from jkpencil.exactalg import MultiPoly, as_rational
from jkpencil.pencilcore import ProjParam, SkewPencil, parse_param
from jkpencil.poisson import BiHamSystem, FunctionFamily, Member, PolyBivector, PolyPencil, Role
from jkpencil.subspaces import Subspace

Scalar = Union[StrictInt, str]
M = TypeVar("M", bound=BaseModel)

_ROLE_RE = re.compile(r"^\s*(casimir|eigenvalue|hamiltonian|extension)\s*(?:\(\s*([^)]*?)\s*\))?\s*$")
_INDEX_PAIR_RE = re.compile(r"^\s*(\d+)\s*,\s*(\d+)\s*$")


class FileModel(BaseModel):
    model_config = ConfigDict(extra="ignore", frozen=True)


class PencilFile(FileModel):
    """{"A": [[...]], "B": [[...]]}; generated files also carry "invariants"."""
    n: int | None = None
    A: list[list[Scalar]]
    B: list[list[Scalar]]

    def to_pencil(self) -> SkewPencil:
        pencil = SkewPencil.from_rows(
            [[as_rational(a) for a in row] for row in self.A],
            [[as_rational(b) for b in row] for row in self.B],
        )
        if self.n is not None and self.n != pencil.n:
            raise InputError(f"pencil file declares n={self.n} but holds {pencil.n}x{pencil.n} matrices")
        return pencil


class SubspaceFile(FileModel):
    ambient: int = Field(ge=0)
    basis: list[list[Scalar]] = Field(default_factory=list)

    def to_subspace(self) -> Subspace:
        return Subspace.span(self.ambient, ([as_rational(a) for a in v] for v in self.basis))


class VectorFile(FileModel):
    vector: list[Scalar]

    def to_vector(self) -> tuple:
        return tuple(as_rational(a) for a in self.vector)


class BivectorFile(FileModel):
    """{"n": int, "entries": {"i,j": "poly"}} with 1-based indices."""
    n: int = Field(ge=1)
    entries: dict[str, str] = Field(default_factory=dict)

    def to_bivector(self) -> PolyBivector:
        parsed = {}
        for key, text in self.entries.items():
            match = _INDEX_PAIR_RE.match(key)
            if match is None:
                raise InputError(f"bivector key must be 'i,j', got {key!r}")
            parsed[(int(match.group(1)) - 1, int(match.group(2)) - 1)] = MultiPoly.parse(text, self.n)
        return PolyBivector.from_entries(self.n, parsed)


class PoissonPencilFile(FileModel):
    A: BivectorFile
    B: BivectorFile

    def to_bivectors(self) -> tuple[PolyBivector, PolyBivector]:
        return self.A.to_bivector(), self.B.to_bivector()


class MemberEntry(FileModel):
    name: str
    f: str
    role: str = "extension"


class FamilyFile(FileModel):
    n: int = Field(ge=1)
    members: list[MemberEntry] = Field(default_factory=list)

    def to_family(self) -> FunctionFamily:
        return FunctionFamily(self.n, tuple(
            Member(m.name, MultiPoly.parse(m.f, self.n), parse_role(m.role)) for m in self.members))


class HamiltonianEntry(FileModel):
    alpha: Scalar
    H: str


class SystemFile(FileModel):
    v: list[str]
    hamiltonians: list[HamiltonianEntry] = Field(default_factory=list)

    def to_system(self, pencil: PolyPencil) -> BiHamSystem:
        n = pencil.n
        v = [MultiPoly.parse(c, n) for c in self.v]
        pairs = [(parse_param(h.alpha), MultiPoly.parse(h.H, n)) for h in self.hamiltonians]
        return BiHamSystem.build(pencil, v, pairs)


def parse_role(text: str) -> Role:
    match = _ROLE_RE.match(text)
    if match is None:
        raise InputError(f"unknown role {text!r}")
    kind, arg = match.group(1), match.group(2)
    param = ProjParam.parse(arg) if arg else None
    if kind in ("casimir", "hamiltonian") and param is None:
        raise InputError(f"role {kind} needs a parameter, e.g. {kind}(0)")
    return Role(kind, param)


def load_model(path: str | Path, model: type[M]) -> M:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        return model.model_validate_json(text)
    except ValidationError as exc:
        raise InputError(f"{path}: {exc}") from exc


def parse_points(text: str, n: int) -> list[tuple]:
    """'1,2,3;0,1/2,1' -> list of points with n coordinates."""
    points = []
    for chunk in text.split(";"):
        if not chunk.strip():
            continue
        point = tuple(as_rational(c.strip()) for c in chunk.split(","))
        if len(point) != n:
            raise InputError(f"point {chunk.strip()!r} has {len(point)} coordinates, expected {n}")
        points.append(point)
    if not points:
        raise InputError("no sample points given")
    return points


def parse_params(values: Sequence[str]) -> list[ProjParam]:
    return [ProjParam.parse(v) for v in values]


def dump_json(report: Any, indent: int = 2) -> str:
    return json.dumps(report, indent=indent or None, ensure_ascii=False)

"""
Seeded generation of canonical direct sums, congruent copies and sample points.

All randomness flows through a ``random.Random`` built from the seed.
"""

import logging
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence

from jkpencil.errors import InputError
from jkpencil.exactalg import RatMatrix, rank
from jkpencil.pencilcore import (
    INF,
    JKInvariants,
    ProjParam,
    SkewPencil,
    build_jordan_block,
    build_kronecker_block,
    congruence_transform,
    direct_sum,
    make_invariants,
)

logger = logging.getLogger(__name__)

_BLOCK_RE = re.compile(r"^\s*(?:J\s*:\s*([^:]+?)\s*:\s*(\d+)|K\s*:\s*(\d+))\s*$", re.IGNORECASE)

CORPUS_EIGENVALUES = (ProjParam.finite(-2), ProjParam.finite(-1), ProjParam.finite(0), ProjParam.finite(1),
                      ProjParam.finite(2), ProjParam.finite(Fraction(1, 2)), INF)


@dataclass(frozen=True)
class BlockSpec:
    kind: Literal["J", "K"]
    size: int
    eig: ProjParam | None = None

    @property
    def dim(self) -> int:
        return 2 * self.size if self.kind == "J" else 2 * self.size - 1

    def build(self) -> SkewPencil:
        if self.kind == "J":
            return build_jordan_block(self.eig, self.size)
        return build_kronecker_block(self.size)

    def __str__(self) -> str:
        return f"J:{self.eig}:{self.size}" if self.kind == "J" else f"K:{self.size}"


def parse_block_spec(text: str) -> list[BlockSpec]:
    """'J:2:4,K:3' -> [J(2, half-size 4), K(3)]."""
    specs = []
    for chunk in text.split(","):
        match = _BLOCK_RE.match(chunk)
        if match is None:
            raise InputError(f"bad block spec {chunk.strip()!r}; expected J:<eig>:<m> or K:<k>")
        if match.group(3) is not None:
            size = int(match.group(3))
            if size < 1:
                raise InputError(f"Kronecker index must be >= 1 in {chunk.strip()!r}")
            specs.append(BlockSpec("K", size))
        else:
            size = int(match.group(2))
            if size < 1:
                raise InputError(f"Jordan half-size must be >= 1 in {chunk.strip()!r}")
            specs.append(BlockSpec("J", size, ProjParam.parse(match.group(1))))
    return specs


def canonical_pencil(specs: Sequence[BlockSpec]) -> SkewPencil:
    if not specs:
        raise InputError("empty block spec")
    return direct_sum(*(s.build() for s in specs))


def ground_truth(specs: Sequence[BlockSpec]) -> JKInvariants:
    n = sum(s.dim for s in specs)
    kronecker = [s.size for s in specs if s.kind == "K"]
    jordan: dict = {}
    for s in specs:
        if s.kind == "J":
            jordan.setdefault(s.eig, []).append(s.size)
    return make_invariants(n, n - len(kronecker), kronecker, jordan)


def random_congruence(n: int, rng: random.Random, bound: int = 3) -> RatMatrix:
    """An invertible n x n integer matrix with entries in [-bound, bound]."""
    attempts = 0
    while True:
        attempts += 1
        rows = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
        s = RatMatrix.from_rows(rows, n)
        if rank(s) == n:
            logger.debug("congruence matrix found after %d draws", attempts)
            return s


@dataclass(frozen=True)
class Instance:
    specs: tuple[BlockSpec, ...]
    pencil: SkewPencil
    invariants: JKInvariants

    def to_json(self) -> dict:
        payload = self.pencil.to_json()
        payload["blocks"] = ",".join(str(s) for s in self.specs)
        payload["invariants"] = self.invariants.to_json()
        return payload


def generate_instance(specs: Sequence[BlockSpec], seed: int, identity: bool = False, bound: int = 3) -> Instance:
    """Random congruent copy of the canonical direct sum, with its ground-truth invariants."""
    canonical = canonical_pencil(specs)
    if identity:
        pencil = canonical
    else:
        pencil = congruence_transform(canonical, random_congruence(canonical.n, random.Random(seed), bound))
    return Instance(tuple(specs), pencil, ground_truth(specs))


def random_block_specs(
    rng: random.Random,
    max_blocks: int = 4,
    max_n: int = 12,
    eigenvalues: Sequence[ProjParam] = CORPUS_EIGENVALUES,
) -> list[BlockSpec]:
    """Up to ``max_blocks`` canonical blocks of total size <= max_n."""
    specs: list[BlockSpec] = []
    remaining = max_n
    for _ in range(rng.randint(1, max_blocks)):
        if remaining < 1:
            break
        if remaining >= 2 and rng.random() < 0.5:
            spec = BlockSpec("J", rng.randint(1, min(3, remaining // 2)), rng.choice(list(eigenvalues)))
        else:
            spec = BlockSpec("K", rng.randint(1, min(3, (remaining + 1) // 2)))
        specs.append(spec)
        remaining -= spec.dim
    return specs


def corpus(count: int, seed: int = 0, **kwargs) -> list[Instance]:
    """``count`` seeded instances; instance i uses congruence seed (seed, i)."""
    rng = random.Random(seed)
    return [generate_instance(random_block_specs(rng, **kwargs), seed=seed * 100003 + i) for i in range(count)]


def random_points(n: int, count: int, seed: int = 0, coordinate_range: int = 5) -> list[tuple[Fraction, ...]]:
    """Integer points with nonzero coordinates in [-range, range]."""
    rng = random.Random(seed)
    choices = [c for c in range(-coordinate_range, coordinate_range + 1) if c != 0]
    return [tuple(Fraction(rng.choice(choices)) for _ in range(n)) for _ in range(count)]

"""Seeded bipartite graph generators.

All randomness comes from numpy's PCG64 bit generator seeded with the spec's
64-bit seed, so a given :class:`GenSpec` yields the same graph on every
platform.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Union

import numpy as np

from .errors import UnsatisfiableSpec
from .graph import BipartiteGraph, is_connected
from .verify import PENDANT_TAG

__all__ = [
    "Gnp",
    "FixedM",
    "Complete",
    "Blocks",
    "WithPendantPair",
    "GenSpec",
    "MAX_ATTEMPTS",
    "generate",
    "generate_with_pendant_pair",
]

MAX_ATTEMPTS = 1000


@dataclass(frozen=True)
class Gnp:
    """Each of the n1 * n2 possible edges is present independently with probability p."""

    p: float


@dataclass(frozen=True)
class FixedM:
    """Exactly m distinct edges drawn uniformly."""

    m: int


@dataclass(frozen=True)
class Complete:
    pass


@dataclass(frozen=True)
class Blocks:
    """Two complete blocks: U[:n1//2] x S[:n2//2] and U[n1//2:] x S[n2//2:].

    Dense (about n1 * n2 / 2 edges) yet half of all U pairs share no
    neighbour, which makes the pair-scan projection read entire rows.
    """


@dataclass(frozen=True)
class WithPendantPair:
    """Base model on (n1 - 1, n2 - 1) plus an isolated pendant edge (n1 - 1, n2 - 1)."""

    base: Union[Gnp, FixedM, Complete]


Model = Union[Gnp, FixedM, Complete, Blocks, WithPendantPair]


@dataclass(frozen=True)
class GenSpec:
    n1: int
    n2: int
    model: Model
    seed: int = 0
    require_connected: bool = False

    def validate(self) -> None:
        if self.n1 < 1 or self.n2 < 1:
            raise UnsatisfiableSpec(f"need n1, n2 >= 1, got {self.n1}, {self.n2}")
        if not 0 <= self.seed < 2**64:
            raise UnsatisfiableSpec(f"seed {self.seed} is not a 64-bit unsigned integer")
        model = self.model
        if isinstance(model, Gnp) and not 0.0 <= model.p <= 1.0:
            raise UnsatisfiableSpec(f"p={model.p} outside [0, 1]")
        if isinstance(model, FixedM) and not 0 <= model.m <= self.n1 * self.n2:
            raise UnsatisfiableSpec(f"m={model.m} outside [0, n1*n2={self.n1 * self.n2}]")


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _draw(n1: int, n2: int, model: Model, rng: np.random.Generator) -> list[tuple[int, int]]:
    if isinstance(model, Gnp):
        rows, cols = np.nonzero(rng.random((n1, n2)) < model.p)
        return list(zip(rows.tolist(), cols.tolist()))
    if isinstance(model, FixedM):
        cells = rng.choice(n1 * n2, size=model.m, replace=False)
        return [(int(c) // n2, int(c) % n2) for c in cells]
    if isinstance(model, Complete):
        return [(u, s) for u in range(n1) for s in range(n2)]
    if isinstance(model, Blocks):
        h1, h2 = n1 // 2, n2 // 2
        top = [(u, s) for u in range(h1) for s in range(h2)]
        bottom = [(u, s) for u in range(h1, n1) for s in range(h2, n2)]
        return top + bottom
    raise TypeError(f"unsupported model {model!r}")


def generate(spec: GenSpec) -> BipartiteGraph:
    """Draw one graph. With ``require_connected`` the draw is repeated until
    the graph is connected, at most :data:`MAX_ATTEMPTS` times."""
    if isinstance(spec.model, WithPendantPair):
        return generate_with_pendant_pair(spec)
    spec.validate()
    n1, n2, model = spec.n1, spec.n2, spec.model
    if spec.require_connected:
        if isinstance(model, FixedM) and model.m < n1 + n2 - 1:
            raise UnsatisfiableSpec(f"m={model.m} edges cannot connect {n1 + n2} vertices")
        if isinstance(model, Gnp) and model.p == 0.0 and n1 + n2 > 1:
            raise UnsatisfiableSpec("p=0 never yields a connected graph")
    rng = _rng(spec.seed)
    deterministic = isinstance(model, (Complete, Blocks))
    attempts = MAX_ATTEMPTS if spec.require_connected and not deterministic else 1
    for _ in range(attempts):
        g = BipartiteGraph(n1, n2, _draw(n1, n2, model, rng))
        if not spec.require_connected or is_connected(g):
            return g
    raise UnsatisfiableSpec(f"no connected graph after {attempts} attempt(s) for {spec}")


def generate_with_pendant_pair(spec: GenSpec) -> BipartiteGraph:
    """Connected base graph on (n1 - 1, n2 - 1) plus the edge (n1 - 1, n2 - 1).

    The extra edge touches nothing else, so both of its endpoints are pendant
    and the result is disconnected by construction. The output is tagged
    ``pendant-pair`` so the verification layer accepts it despite the
    disconnection.
    """
    model = spec.model.base if isinstance(spec.model, WithPendantPair) else spec.model
    if isinstance(model, (WithPendantPair, Blocks)):
        raise UnsatisfiableSpec(f"unsupported base model {model!r} for a pendant-pair instance")
    if spec.n1 < 2 or spec.n2 < 2:
        raise UnsatisfiableSpec(f"pendant-pair instances need n1, n2 >= 2, got {spec.n1}, {spec.n2}")
    base = generate(replace(spec, n1=spec.n1 - 1, n2=spec.n2 - 1, model=model, require_connected=True))
    u, s = spec.n1 - 1, spec.n2 - 1
    return BipartiteGraph(spec.n1, spec.n2, list(base.edges) + [(u, s)], tags=[PENDANT_TAG])

"""One-mode projections of a bipartite graph.

Two routes compute the same unweighted projection:

* :func:`project_matrix` scans the bi-adjacency matrix pair by pair and stops
  at the first shared column. Theta(n1^2 * n2) in the worst case.
* :func:`project_sparse` walks each opposite-side vertex and links every pair
  in its neighbourhood (wedge enumeration). O(sum_k d_k^2) work.

:func:`project_weighted` counts wedges per pair, giving
``W[i, j] = |N(u_i) & N(u_j)|``.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping

import numpy as np

from .graph import BiAdjacencyMatrix, BipartiteGraph, to_biadjacency, transpose

__all__ = [
    "Side",
    "UnipartiteGraph",
    "WeightedUnipartiteGraph",
    "project_matrix",
    "project_matrix_weighted",
    "project_sparse",
    "project_weighted",
    "project",
    "strip_weights",
]


class Side(enum.Enum):
    """Which vertex set survives the projection."""

    U = "u"
    S = "s"


def _norm(i: int, j: int) -> tuple[int, int]:
    if i == j:
        raise ValueError(f"self-loop on vertex {i}")
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class UnipartiteGraph:
    """Simple undirected graph on vertices 0..n-1; edges stored as (i, j) with i < j."""

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        edges = frozenset(_norm(int(i), int(j)) for i, j in self.edges)
        for i, j in edges:
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f"edge ({i}, {j}) outside 0..{self.n - 1}")
        object.__setattr__(self, "edges", edges)

    def has_edge(self, i: int, j: int) -> bool:
        return i != j and _norm(i, j) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        for a in adj:
            a.sort()
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def isolated_vertices(self) -> list[int]:
        touched = set()
        for i, j in self.edges:
            touched.add(i)
            touched.add(j)
        return [v for v in range(self.n) if v not in touched]

    def components(self) -> list[list[int]]:
        adj = self.adjacency()
        seen = [False] * self.n
        comps = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            stack, comp = [start], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def to_matrix(self) -> np.ndarray:
        """Symmetric 0/1 adjacency matrix with an empty diagonal."""
        a = np.zeros((self.n, self.n), dtype=np.uint8)
        for i, j in self.edges:
            a[i, j] = a[j, i] = 1
        return a

    def without_edge(self, i: int, j: int) -> UnipartiteGraph:
        return UnipartiteGraph(self.n, self.edges - {_norm(i, j)})


@dataclass(frozen=True, eq=True)
class WeightedUnipartiteGraph:
    """Undirected graph whose edge weights are positive integers.

    ``weights`` maps (i, j) with i < j to the weight. Weights are not
    validated against the lower bound here, so that corrupted projections can
    be represented and rejected by the verification checks.
    """

    n: int
    weights: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        norm = {}
        for (i, j), w in self.weights.items():
            key = _norm(int(i), int(j))
            if not (0 <= key[0] and key[1] < self.n):
                raise ValueError(f"edge {key} outside 0..{self.n - 1}")
            if isinstance(w, bool) or int(w) != w:
                raise TypeError(f"weight {w!r} of edge {key} is not an integer")
            norm[key] = int(w)
        object.__setattr__(self, "weights", norm)

    __hash__ = None  # type: ignore[assignment]

    def weight(self, i: int, j: int) -> int:
        if i == j:
            return 0
        return self.weights.get(_norm(i, j), 0)

    @property
    def total_weight(self) -> int:
        return sum(self.weights.values())

    @property
    def max_weight(self) -> int:
        return max(self.weights.values(), default=0)

    def sorted_items(self) -> list[tuple[tuple[int, int], int]]:
        return sorted(self.weights.items())

    def with_weight(self, i: int, j: int, w: int) -> WeightedUnipartiteGraph:
        weights = dict(self.weights)
        weights[_norm(i, j)] = w
        return WeightedUnipartiteGraph(self.n, weights)

    def without_edge(self, i: int, j: int) -> WeightedUnipartiteGraph:
        weights = dict(self.weights)
        weights.pop(_norm(i, j), None)
        return WeightedUnipartiteGraph(self.n, weights)


def project_matrix(matrix: BiAdjacencyMatrix | Iterable) -> UnipartiteGraph:
    """Projection of the row vertices by exhaustive pair scan of the bi-adjacency matrix.

    For every row pair i < j the columns are scanned left to right and the
    scan stops at the first column holding a 1 in both rows.
    """
    if not isinstance(matrix, BiAdjacencyMatrix):
        matrix = BiAdjacencyMatrix(matrix)
    rows = matrix.cells.tolist()
    n1, n2 = matrix.shape
    edges = []
    for i in range(n1):
        row_i = rows[i]
        for j in range(i + 1, n1):
            row_j = rows[j]
            for k in range(n2):
                if row_i[k] and row_j[k]:
                    edges.append((i, j))
                    break
    return UnipartiteGraph(n1, frozenset(edges))


def project_matrix_weighted(matrix: BiAdjacencyMatrix | Iterable) -> WeightedUnipartiteGraph:
    """Pair-scan variant that counts shared columns instead of stopping at the first."""
    if not isinstance(matrix, BiAdjacencyMatrix):
        matrix = BiAdjacencyMatrix(matrix)
    rows = matrix.cells.tolist()
    n1, n2 = matrix.shape
    weights = {}
    for i in range(n1):
        row_i = rows[i]
        for j in range(i + 1, n1):
            row_j = rows[j]
            count = 0
            for k in range(n2):
                if row_i[k] and row_j[k]:
                    count += 1
            if count:
                weights[(i, j)] = count
    return WeightedUnipartiteGraph(n1, weights)


def _oriented(g: BipartiteGraph, side: Side) -> BipartiteGraph:
    side = Side(side)
    return g if side is Side.U else transpose(g)


def project_sparse(g: BipartiteGraph, side: Side = Side.U) -> UnipartiteGraph:
    """Unweighted projection by expanding the clique on every N(s)."""
    g = _oriented(g, side)
    edges: set[tuple[int, int]] = set()
    for nbrs in g.adj_s:
        # nbrs is sorted, so combinations() yields (i, j) with i < j
        edges.update(combinations(nbrs, 2))
    return UnipartiteGraph(g.n1, frozenset(edges))


def project_weighted(g: BipartiteGraph, side: Side = Side.U) -> WeightedUnipartiteGraph:
    """Weighted projection: weight of {i, j} is the number of shared neighbours."""
    g = _oriented(g, side)
    counts: Counter = Counter()
    for nbrs in g.adj_s:
        counts.update(combinations(nbrs, 2))
    return WeightedUnipartiteGraph(g.n1, dict(counts))


def project(
    g: BipartiteGraph,
    side: Side = Side.U,
    *,
    weighted: bool = False,
    algo: str = "sparse",
):
    """Dispatch helper used by the CLI. ``algo`` is ``"matrix"`` or ``"sparse"``."""
    if algo == "sparse":
        return project_weighted(g, side) if weighted else project_sparse(g, side)
    if algo == "matrix":
        matrix = to_biadjacency(_oriented(g, side))
        return project_matrix_weighted(matrix) if weighted else project_matrix(matrix)
    raise ValueError(f"unknown algorithm {algo!r}")


def strip_weights(wg: WeightedUnipartiteGraph) -> UnipartiteGraph:
    return UnipartiteGraph(wg.n, frozenset(e for e, w in wg.weights.items() if w != 0))

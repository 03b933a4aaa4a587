"""Bipartite graph container, bi-adjacency conversion and degree statistics.

Vertices are dense 0-based integers on each side: U = 0..n1-1 and
S = 0..n2-1. A label ``u_i`` in the usual 1-based notation is index ``i - 1``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from .errors import InvalidVertex, MalformedMatrix

__all__ = [
    "BipartiteGraph",
    "BiAdjacencyMatrix",
    "DegreeSums",
    "DensityStats",
    "from_edge_list",
    "from_biadjacency",
    "to_biadjacency",
    "transpose",
    "degree_sums",
    "is_connected",
    "density_stats",
]


class BipartiteGraph:
    """Immutable simple bipartite graph G(U, S, E).

    ``adj_u[u]`` is the sorted tuple of S-neighbours of ``u`` and ``adj_s[s]``
    the sorted tuple of U-neighbours of ``s``. ``tags`` carries provenance
    markers (the generator sets ``"pendant-pair"``); tags do not take part in
    equality.
    """

    __slots__ = ("n1", "n2", "edges", "adj_u", "adj_s", "tags")

    def __init__(
        self,
        n1: int,
        n2: int,
        edges: Iterable[tuple[int, int]] = (),
        tags: Iterable[str] = (),
    ):
        if n1 < 1:
            raise InvalidVertex("U", n1)
        if n2 < 1:
            raise InvalidVertex("S", n2)
        edge_set = set()
        for u, s in edges:
            u, s = int(u), int(s)
            if not 0 <= u < n1:
                raise InvalidVertex("U", u)
            if not 0 <= s < n2:
                raise InvalidVertex("S", s)
            edge_set.add((u, s))

        adj_u: list[list[int]] = [[] for _ in range(n1)]
        adj_s: list[list[int]] = [[] for _ in range(n2)]
        for u, s in sorted(edge_set):
            adj_u[u].append(s)
            adj_s[s].append(u)
        # adj_u comes out sorted from the sort above; adj_s does too because
        # edges are visited in increasing u order.

        object.__setattr__(self, "n1", n1)
        object.__setattr__(self, "n2", n2)
        object.__setattr__(self, "edges", frozenset(edge_set))
        object.__setattr__(self, "adj_u", tuple(tuple(a) for a in adj_u))
        object.__setattr__(self, "adj_s", tuple(tuple(a) for a in adj_s))
        object.__setattr__(self, "tags", frozenset(tags))

        sums = degree_sums(self)
        assert sums.sum_u == sums.sum_s == sums.m, sums

    def __setattr__(self, name, value):
        raise AttributeError("BipartiteGraph is immutable")

    @property
    def m(self) -> int:
        return len(self.edges)

    def deg_u(self, u: int) -> int:
        return len(self.adj_u[u])

    def deg_s(self, s: int) -> int:
        return len(self.adj_s[s])

    def with_tags(self, *tags: str) -> BipartiteGraph:
        return BipartiteGraph(self.n1, self.n2, self.edges, self.tags | set(tags))

    def __eq__(self, other):
        if not isinstance(other, BipartiteGraph):
            return NotImplemented
        return (self.n1, self.n2, self.edges) == (other.n1, other.n2, other.edges)

    def __hash__(self):
        return hash((self.n1, self.n2, self.edges))

    def __repr__(self):
        tags = f", tags={sorted(self.tags)}" if self.tags else ""
        return f"BipartiteGraph(n1={self.n1}, n2={self.n2}, m={self.m}{tags})"


class BiAdjacencyMatrix:
    """Dense 0/1 matrix B of shape (n1, n2); ``B[i, j] == 1`` iff (u_i, s_j) is an edge."""

    __slots__ = ("cells",)

    def __init__(self, cells):
        arr = np.asarray(cells)
        if arr.ndim != 2:
            raise MalformedMatrix(-1, -1, f"expected a 2-D matrix, got {arr.ndim} dimension(s)")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise MalformedMatrix(-1, -1, f"empty shape {arr.shape}")
        if arr.dtype.kind in "biuf":
            bad = np.argwhere((arr != 0) & (arr != 1))
            if len(bad):
                i, j = bad[0]
                raise MalformedMatrix(int(i), int(j), f"cell value {arr[i, j]!r} is not 0/1")
        else:
            for (i, j), v in np.ndenumerate(arr):
                if isinstance(v, (str, bytes)) or v not in (0, 1):
                    raise MalformedMatrix(i, j, f"cell value {v!r} is not 0/1")
        out = arr.astype(np.uint8)
        out.flags.writeable = False
        self.cells = out

    @property
    def rows(self) -> int:
        return self.cells.shape[0]

    @property
    def cols(self) -> int:
        return self.cells.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.cells.shape

    def tolist(self) -> list[list[int]]:
        return self.cells.tolist()

    def __getitem__(self, key):
        return self.cells[key]

    def __eq__(self, other):
        if not isinstance(other, BiAdjacencyMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.cells, other.cells))

    def __repr__(self):
        return f"BiAdjacencyMatrix({self.rows}x{self.cols}, ones={int(self.cells.sum())})"


class DegreeSums(NamedTuple):
    sum_u: int
    sum_s: int
    m: int


@dataclass(frozen=True)
class DensityStats:
    n1: int
    n2: int
    m: int
    max_edges: int
    density: float
    linear_budget: int


def from_edge_list(n1: int, n2: int, pairs: Iterable[tuple[int, int]]) -> BipartiteGraph:
    """Build a graph from (u, s) index pairs. Duplicates are dropped silently."""
    return BipartiteGraph(n1, n2, pairs)


def from_biadjacency(matrix: BiAdjacencyMatrix | np.ndarray | list) -> BipartiteGraph:
    if not isinstance(matrix, BiAdjacencyMatrix):
        matrix = BiAdjacencyMatrix(matrix)
    rows, cols = np.nonzero(matrix.cells)
    return BipartiteGraph(matrix.rows, matrix.cols, zip(rows.tolist(), cols.tolist()))


def to_biadjacency(g: BipartiteGraph) -> BiAdjacencyMatrix:
    cells = np.zeros((g.n1, g.n2), dtype=np.uint8)
    for u, s in g.edges:
        cells[u, s] = 1
    return BiAdjacencyMatrix(cells)


def transpose(g: BipartiteGraph) -> BipartiteGraph:
    """Swap the roles of U and S."""
    return BipartiteGraph(g.n2, g.n1, ((s, u) for u, s in g.edges), g.tags)


def degree_sums(g: BipartiteGraph) -> DegreeSums:
    return DegreeSums(
        sum_u=sum(len(a) for a in g.adj_u),
        sum_s=sum(len(a) for a in g.adj_s),
        m=len(g.edges),
    )


def is_connected(g: BipartiteGraph) -> bool:
    """True iff a breadth-first search from u_0 reaches all n1 + n2 vertices."""
    seen_u = [False] * g.n1
    seen_s = [False] * g.n2
    seen_u[0] = True
    reached = 1
    # queue holds (side, index); side 0 = U, 1 = S
    queue = deque([(0, 0)])
    while queue:
        side, v = queue.popleft()
        if side == 0:
            for s in g.adj_u[v]:
                if not seen_s[s]:
                    seen_s[s] = True
                    reached += 1
                    queue.append((1, s))
        else:
            for u in g.adj_s[v]:
                if not seen_u[u]:
                    seen_u[u] = True
                    reached += 1
                    queue.append((0, u))
    return reached == g.n1 + g.n2


def density_stats(g: BipartiteGraph) -> DensityStats:
    """Raw quantities behind the sparse/dense distinction.

    No verdict is returned: sparse (m = O(n1 + n2)) versus dense
    (m = O(n1 * n2)) describes graph families, not single instances.
    """
    max_edges = g.n1 * g.n2
    return DensityStats(
        n1=g.n1,
        n2=g.n2,
        m=g.m,
        max_edges=max_edges,
        density=g.m / max_edges,
        linear_budget=g.n1 + g.n2,
    )

"""Text formats for bipartite inputs and projection outputs.

Bi-adjacency::

    n1 n2
    <n1 rows of n2 whitespace-separated 0/1 tokens>

Edge list (0-based indices, ``#`` starts a comment)::

    n1 n2
    u<TAB>s
    ...

A comment of the form ``# tag: NAME`` attaches provenance tag NAME to the
graph; the generator uses it to mark pendant-pair instances.
"""

from __future__ import annotations

from pathlib import Path

from .errors import InvalidVertex, MalformedMatrix, ParseError
from .graph import BiAdjacencyMatrix, BipartiteGraph, from_biadjacency
from .projection import UnipartiteGraph, WeightedUnipartiteGraph, strip_weights

FORMATS = ("biadj", "edgelist")
TAG_PREFIX = "# tag:"


def _lines(text: str) -> list[tuple[int, str]]:
    """Numbered lines (1-based) with trailing whitespace stripped."""
    return [(no, line.rstrip()) for no, line in enumerate(text.splitlines(), start=1)]


def _header(lines: list[tuple[int, str]]) -> tuple[int, int, int]:
    """Return (n1, n2, index of the first line after the header)."""
    for idx, (no, line) in enumerate(lines):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"header must be 'n1 n2', got {line!r}", no)
        try:
            n1, n2 = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"header must hold two integers, got {line!r}", no) from None
        if n1 < 1 or n2 < 1:
            raise ParseError(f"vertex counts must be >= 1, got {n1} {n2}", no)
        return n1, n2, idx + 1
    raise ParseError("empty input: missing 'n1 n2' header", 1)


def detect_format(text: str) -> str:
    """Two-integer header followed by n1 rows of n2 0/1 tokens means bi-adjacency."""
    lines = _lines(text)
    n1, n2, start = _header(lines)
    rows = [line for _, line in lines[start:] if line.strip()]
    if len(rows) != n1:
        return "edgelist"
    for line in rows:
        tokens = line.split()
        if len(tokens) != n2 or any(t not in ("0", "1") for t in tokens):
            return "edgelist"
    return "biadj"


def parse_biadjacency(text: str) -> BipartiteGraph:
    lines = _lines(text)
    n1, n2, start = _header(lines)
    rows = [(no, line) for no, line in lines[start:] if line.strip()]
    if len(rows) != n1:
        last = rows[-1][0] if rows else lines[start - 1][0]
        raise ParseError(f"expected {n1} matrix rows, found {len(rows)}", last)
    cells = []
    for r, (no, line) in enumerate(rows):
        tokens = line.split()
        for c, tok in enumerate(tokens):
            if tok not in ("0", "1"):
                raise MalformedMatrix(r, c, f"token {tok!r} is not 0/1", line=no)
        if len(tokens) != n2:
            raise MalformedMatrix(r, min(len(tokens), n2), f"row has {len(tokens)} cells, expected {n2}", line=no)
        cells.append([int(t) for t in tokens])
    return from_biadjacency(BiAdjacencyMatrix(cells))


def parse_edge_list(text: str) -> BipartiteGraph:
    lines = _lines(text)
    n1, n2, start = _header(lines)
    tags = []
    pairs = []
    for _, line in lines:
        stripped = line.strip()
        if stripped.startswith(TAG_PREFIX):
            tags.append(stripped[len(TAG_PREFIX):].strip())
    for no, line in lines[start:]:
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if len(tokens) != 2:
            raise ParseError(f"edge line must be 'u<TAB>s', got {line!r}", no)
        try:
            u, s = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"edge endpoints must be integers, got {line!r}", no) from None
        if not 0 <= u < n1:
            raise InvalidVertex("U", u, line=no)
        if not 0 <= s < n2:
            raise InvalidVertex("S", s, line=no)
        pairs.append((u, s))
    return BipartiteGraph(n1, n2, pairs, tags)


def parse_graph(text: str, fmt: str | None = None) -> BipartiteGraph:
    fmt = fmt or detect_format(text)
    if fmt == "biadj":
        return parse_biadjacency(text)
    if fmt == "edgelist":
        return parse_edge_list(text)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def read_graph(path: str | Path, fmt: str | None = None) -> BipartiteGraph:
    return parse_graph(Path(path).read_text(), fmt)


def format_biadjacency(g: BipartiteGraph) -> str:
    rows = [["0"] * g.n2 for _ in range(g.n1)]
    for u, s in g.edges:
        rows[u][s] = "1"
    return "\n".join([f"{g.n1} {g.n2}"] + [" ".join(r) for r in rows]) + "\n"


def format_edge_list(g: BipartiteGraph) -> str:
    out = [f"{g.n1} {g.n2}"]
    out += [f"{TAG_PREFIX} {t}" for t in sorted(g.tags)]
    out += [f"{u}\t{s}" for u, s in sorted(g.edges)]
    return "\n".join(out) + "\n"


def format_projection(proj: UnipartiteGraph | WeightedUnipartiteGraph) -> str:
    """Edge-list output, one edge per line with i < j in lexicographic order."""
    out = [str(proj.n)]
    if isinstance(proj, WeightedUnipartiteGraph):
        out += [f"{i}\t{j}\t{w}" for (i, j), w in proj.sorted_items()]
    else:
        out += [f"{i}\t{j}" for i, j in proj.sorted_edges()]
    return "\n".join(out) + "\n"


def format_adjacency_matrix(proj: UnipartiteGraph | WeightedUnipartiteGraph) -> str:
    """Dense n x n 0/1 adjacency matrix in the bi-adjacency text layout."""
    if isinstance(proj, WeightedUnipartiteGraph):
        proj = strip_weights(proj)
    a = proj.to_matrix()
    return "\n".join([f"{proj.n} {proj.n}"] + [" ".join(map(str, row)) for row in a.tolist()]) + "\n"


def parse_projection(text: str) -> UnipartiteGraph | WeightedUnipartiteGraph:
    """Inverse of :func:`format_projection`."""
    lines = [(no, line.strip()) for no, line in _lines(text) if line.strip()]
    if not lines:
        raise ParseError("empty projection file", 1)
    try:
        n = int(lines[0][1])
    except ValueError:
        raise ParseError(f"header must be a vertex count, got {lines[0][1]!r}", lines[0][0]) from None
    rows = [(no, line.split()) for no, line in lines[1:]]
    if rows and len(rows[0][1]) == 3:
        weights = {}
        for no, tok in rows:
            if len(tok) != 3:
                raise ParseError("expected 'i<TAB>j<TAB>w'", no)
            weights[(int(tok[0]), int(tok[1]))] = int(tok[2])
        return WeightedUnipartiteGraph(n, weights)
    edges = []
    for no, tok in rows:
        if len(tok) != 2:
            raise ParseError("expected 'i<TAB>j'", no)
        edges.append((int(tok[0]), int(tok[1])))
    return UnipartiteGraph(n, frozenset(edges))

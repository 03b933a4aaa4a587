"""Instance checks for the structural results on projected networks.

Each ``check_*`` function returns a :class:`VerificationReport`. A failing
report always carries a counterexample small enough to be re-checked by hand.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Any

from .errors import DimensionMismatch, PreconditionViolated
from .graph import BipartiteGraph, degree_sums, is_connected
from .projection import (
    UnipartiteGraph,
    WeightedUnipartiteGraph,
    project_sparse,
    project_weighted,
)

__all__ = [
    "PropertyId",
    "Status",
    "VerificationReport",
    "PENDANT_TAG",
    "check_degree_sum",
    "check_clique_induction",
    "find_pendant_pair",
    "check_pendant_disconnection",
    "check_weight_bounds",
    "check_total_weight_identity",
    "check_weight_sum_upper_bound",
    "verify_all",
    "choose2",
]

PENDANT_TAG = "pendant-pair"


class PropertyId(enum.Enum):
    DegreeSum = "DegreeSum"
    CliqueInduction = "CliqueInduction"
    PendantDisconnection = "PendantDisconnection"
    WeightBounds = "WeightBounds"
    TotalWeightIdentity = "TotalWeightIdentity"
    WeightSumUpperBound = "WeightSumUpperBound"


class Status(enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    VACUOUS = "VACUOUS"
    NOT_APPLICABLE = "N/A"


@dataclass(frozen=True)
class VerificationReport:
    property_id: PropertyId
    status: Status
    details: dict[str, Any] = field(default_factory=dict)
    counterexample: dict[str, Any] | None = None

    def __post_init__(self):
        if (self.status is Status.FAIL) != (self.counterexample is not None):
            raise ValueError("a counterexample must be present exactly when the report fails")

    @property
    def passed(self) -> bool:
        return self.status is not Status.FAIL

    def to_line(self) -> str:
        parts = [f"{k}={_fmt(v)}" for k, v in self.details.items()]
        if self.counterexample is not None:
            parts += [f"counterexample.{k}={_fmt(v)}" for k, v in self.counterexample.items()]
        return f"{self.property_id.value}\t{self.status.value}\t{' '.join(parts)}"

    def to_dict(self) -> dict[str, Any]:
        return {
            "property_id": self.property_id.value,
            "status": self.status.value,
            "passed": self.passed,
            "details": dict(self.details),
            "counterexample": None if self.counterexample is None else dict(self.counterexample),
        }


def _fmt(v) -> str:
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, (tuple, list)):
        return ",".join(map(str, v))
    return str(v).replace(" ", "_")


def choose2(d: int) -> int:
    """d choose 2, zero for d < 2."""
    return comb(d, 2) if d >= 2 else 0


def _require_dims(g: BipartiteGraph, proj) -> None:
    if proj.n != g.n1:
        raise DimensionMismatch(f"projection has {proj.n} vertices, graph has n1={g.n1}")


def check_degree_sum(g: BipartiteGraph) -> VerificationReport:
    """Degree sums of both sides equal the edge count.

    For connected graphs the per-vertex bounds 1 <= deg(u) <= n2 and
    1 <= deg(s) <= n1 are checked as well.
    """
    sums = degree_sums(g)
    deg_u = [len(a) for a in g.adj_u]
    deg_s = [len(a) for a in g.adj_s]
    connected = is_connected(g)
    details = {
        "sum_u": sums.sum_u,
        "sum_s": sums.sum_s,
        "m": sums.m,
        "min_deg_u": min(deg_u),
        "max_deg_u": max(deg_u),
        "min_deg_s": min(deg_s),
        "max_deg_s": max(deg_s),
        "connected": connected,
    }
    if not sums.sum_u == sums.sum_s == sums.m:
        return VerificationReport(PropertyId.DegreeSum, Status.FAIL, details, dict(sums._asdict()))
    low = 1 if connected else 0
    for side, degs, cap in (("U", deg_u, g.n2), ("S", deg_s, g.n1)):
        for v, d in enumerate(degs):
            if not low <= d <= cap:
                cx = {"side": side, "vertex": v, "degree": d, "lower": low, "upper": cap}
                return VerificationReport(PropertyId.DegreeSum, Status.FAIL, details, cx)
    return VerificationReport(PropertyId.DegreeSum, Status.PASS, details)


def check_clique_induction(g: BipartiteGraph, proj: UnipartiteGraph) -> VerificationReport:
    """Every s with deg(s) >= 2 must turn N(s) into a clique of the U-projection."""
    _require_dims(g, proj)
    cliques = 0
    pairs = 0
    largest = 0
    for s, nbrs in enumerate(g.adj_s):
        if len(nbrs) < 2:
            continue
        cliques += 1
        largest = max(largest, len(nbrs))
        for i, j in combinations(nbrs, 2):
            pairs += 1
            if not proj.has_edge(i, j):
                details = {"cliques_checked": cliques, "pairs_checked": pairs}
                cx = {"s": s, "u_i": i, "u_j": j}
                return VerificationReport(PropertyId.CliqueInduction, Status.FAIL, details, cx)
    details = {"cliques_checked": cliques, "pairs_checked": pairs, "largest_clique": largest}
    status = Status.PASS if cliques else Status.VACUOUS
    return VerificationReport(PropertyId.CliqueInduction, status, details)


def find_pendant_pair(g: BipartiteGraph) -> tuple[int, int] | None:
    """First edge (u, s), in sorted order, whose endpoints both have degree 1."""
    for u, nbrs in enumerate(g.adj_u):
        if len(nbrs) == 1 and len(g.adj_s[nbrs[0]]) == 1:
            return (u, nbrs[0])
    return None


def check_pendant_disconnection(
    g: BipartiteGraph, proj: UnipartiteGraph | None = None
) -> VerificationReport:
    """An edge with two pendant endpoints isolates its U end in the projection.

    Untagged input must be connected; graphs tagged ``pendant-pair`` by the
    generator are disconnected on purpose and are accepted as they are.
    Raises :class:`PreconditionViolated` for untagged disconnected input.
    """
    tagged = PENDANT_TAG in g.tags
    if not tagged and not is_connected(g):
        raise PreconditionViolated("pendant-pair check needs a connected graph (or a generator-tagged instance)")
    pair = find_pendant_pair(g)
    if pair is None:
        return VerificationReport(
            PropertyId.PendantDisconnection, Status.VACUOUS, {"applicable": False, "reason": "no pendant pair"}
        )
    u, s = pair
    if g.n1 < 2:
        return VerificationReport(
            PropertyId.PendantDisconnection,
            Status.VACUOUS,
            {"applicable": False, "reason": "n1 < 2", "pendant_u": u, "pendant_s": s},
        )
    if proj is None:
        proj = project_sparse(g)
    _require_dims(g, proj)
    comps = proj.components()
    details = {"applicable": True, "pendant_u": u, "pendant_s": s, "components": len(comps), "tagged": tagged}
    for i, j in proj.edges:
        if u in (i, j):
            cx = {"u": u, "s": s, "neighbor": j if i == u else i}
            return VerificationReport(PropertyId.PendantDisconnection, Status.FAIL, details, cx)
    if len(comps) < 2:
        cx = {"u": u, "s": s, "components": len(comps)}
        return VerificationReport(PropertyId.PendantDisconnection, Status.FAIL, details, cx)
    return VerificationReport(PropertyId.PendantDisconnection, Status.PASS, details)


def check_weight_bounds(g: BipartiteGraph, wproj: WeightedUnipartiteGraph) -> VerificationReport:
    _require_dims(g, wproj)
    details = {"edges_checked": len(wproj.weights), "max_weight": wproj.max_weight, "n2": g.n2}
    for (i, j), w in wproj.sorted_items():
        if not 1 <= w <= g.n2:
            cx = {"u_i": i, "u_j": j, "weight": w, "lower": 1, "upper": g.n2}
            return VerificationReport(PropertyId.WeightBounds, Status.FAIL, details, cx)
    details["tight"] = wproj.max_weight == g.n2
    status = Status.PASS if wproj.weights else Status.VACUOUS
    return VerificationReport(PropertyId.WeightBounds, status, details)


def check_total_weight_identity(g: BipartiteGraph, wproj: WeightedUnipartiteGraph) -> VerificationReport:
    """Sum of all weights equals the wedge count, sum over s of C(deg(s), 2)."""
    _require_dims(g, wproj)
    lhs = wproj.total_weight
    rhs = sum(choose2(len(nbrs)) for nbrs in g.adj_s)
    details = {"lhs": lhs, "rhs": rhs}
    if lhs == rhs:
        return VerificationReport(PropertyId.TotalWeightIdentity, Status.PASS, details)
    cx: dict[str, Any] = {"lhs": lhs, "rhs": rhs}
    honest = project_weighted(g)
    for key in sorted(set(honest.weights) | set(wproj.weights)):
        if honest.weight(*key) != wproj.weight(*key):
            cx.update(u_i=key[0], u_j=key[1], weight=wproj.weight(*key), common_neighbors=honest.weight(*key))
            break
    return VerificationReport(PropertyId.TotalWeightIdentity, Status.FAIL, details, cx)


def check_weight_sum_upper_bound(g: BipartiteGraph, wproj: WeightedUnipartiteGraph) -> VerificationReport:
    """Total weight is at most n1 * n2 * (n1 - 1) / 2."""
    _require_dims(g, wproj)
    omega = wproj.total_weight
    bound = g.n1 * g.n2 * (g.n1 - 1) // 2
    details = {
        "omega": omega,
        "bound": bound,
        "equality": omega == bound,
        "complete": g.m == g.n1 * g.n2,
    }
    if omega > bound:
        return VerificationReport(PropertyId.WeightSumUpperBound, Status.FAIL, details, {"omega": omega, "bound": bound})
    return VerificationReport(PropertyId.WeightSumUpperBound, Status.PASS, details)


def verify_all(
    g: BipartiteGraph,
    proj: UnipartiteGraph | None = None,
    wproj: WeightedUnipartiteGraph | None = None,
) -> list[VerificationReport]:
    """Run every check, one report per :class:`PropertyId`, in enum order.

    Projections are computed with the sparse routes unless supplied.
    """
    if proj is None:
        proj = project_sparse(g)
    if wproj is None:
        wproj = project_weighted(g)
    reports = [check_degree_sum(g), check_clique_induction(g, proj)]
    try:
        reports.append(check_pendant_disconnection(g, proj))
    except PreconditionViolated as exc:
        reports.append(
            VerificationReport(
                PropertyId.PendantDisconnection,
                Status.NOT_APPLICABLE,
                {"applicable": False, "reason": str(exc)},
            )
        )
    reports += [
        check_weight_bounds(g, wproj),
        check_total_weight_identity(g, wproj),
        check_weight_sum_upper_bound(g, wproj),
    ]
    return reports

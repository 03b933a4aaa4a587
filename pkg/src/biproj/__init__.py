"""Unweighted and weighted one-mode projections of bipartite graphs."""

from .errors import (
    BiprojError,
    DimensionMismatch,
    InvalidVertex,
    MalformedMatrix,
    ParseError,
    PreconditionViolated,
    UnsatisfiableSpec,
)
from .graph import (
    BiAdjacencyMatrix,
    BipartiteGraph,
    degree_sums,
    density_stats,
    from_biadjacency,
    from_edge_list,
    is_connected,
    to_biadjacency,
    transpose,
)
from .projection import (
    Side,
    UnipartiteGraph,
    WeightedUnipartiteGraph,
    project_matrix,
    project_matrix_weighted,
    project_sparse,
    project_weighted,
    strip_weights,
)
from .verify import (
    PropertyId,
    Status,
    VerificationReport,
    check_clique_induction,
    check_pendant_disconnection,
    check_total_weight_identity,
    check_weight_bounds,
    check_weight_sum_upper_bound,
    find_pendant_pair,
    verify_all,
)
from .generator import Blocks, Complete, FixedM, GenSpec, Gnp, WithPendantPair, generate, generate_with_pendant_pair

__version__ = "0.1.0"

import math

import pytest

from biproj import BipartiteGraph, UnsatisfiableSpec, find_pendant_pair, is_connected, project_sparse
from biproj.generator import (
    MAX_ATTEMPTS,
    Blocks,
    Complete,
    FixedM,
    GenSpec,
    Gnp,
    WithPendantPair,
    generate,
    generate_with_pendant_pair,
)


def test_complete():
    g = generate(GenSpec(3, 3, Complete()))
    assert g.m == 9


def test_fixed_m_zero():
    g = generate(GenSpec(5, 4, FixedM(0)))
    assert g == BipartiteGraph(5, 4)


@pytest.mark.parametrize("m", [1, 7, 20])
def test_fixed_m_count(m):
    assert generate(GenSpec(5, 4, FixedM(m), seed=11)).m == m


@pytest.mark.parametrize("model", [Gnp(0.4), FixedM(9), Complete(), Blocks()])
def test_determinism(model):
    a = generate(GenSpec(6, 4, model, seed=1234))
    b = generate(GenSpec(6, 4, model, seed=1234))
    assert a.edges == b.edges


def test_seed_changes_output():
    graphs = {generate(GenSpec(10, 10, Gnp(0.5), seed=s)).edges for s in range(5)}
    assert len(graphs) == 5


def test_frozen_stream():
    # regression pin for the PCG64 stream; recorded from the first release
    g = generate(GenSpec(4, 3, Gnp(0.5), seed=42))
    assert sorted(g.edges) == [(0, 1), (1, 1), (2, 2), (3, 0), (3, 1)]


def test_gnp_edge_count_within_five_sigma():
    n1, n2, p = 20, 15, 0.3
    mean = p * n1 * n2
    sigma = math.sqrt(n1 * n2 * p * (1 - p))
    for seed in range(100):
        m = generate(GenSpec(n1, n2, Gnp(p), seed=seed)).m
        assert abs(m - mean) <= 5 * sigma


def test_gnp_extremes():
    assert generate(GenSpec(4, 5, Gnp(0.0))).m == 0
    assert generate(GenSpec(4, 5, Gnp(1.0))).m == 20


def test_blocks():
    g = generate(GenSpec(4, 6, Blocks()))
    assert g.m == 2 * 3 + 2 * 3
    assert project_sparse(g).edges == {(0, 1), (2, 3)}


def test_require_connected():
    for seed in range(10):
        assert is_connected(generate(GenSpec(8, 6, Gnp(0.3), seed=seed, require_connected=True)))


@pytest.mark.parametrize(
    "spec",
    [
        GenSpec(3, 3, FixedM(10)),
        GenSpec(3, 3, FixedM(-1)),
        GenSpec(3, 3, Gnp(1.5)),
        GenSpec(0, 3, Complete()),
        GenSpec(3, 3, FixedM(4), require_connected=True),
        GenSpec(3, 3, Gnp(0.0), require_connected=True),
        GenSpec(4, 4, Blocks(), require_connected=True),
    ],
)
def test_unsatisfiable(spec):
    with pytest.raises(UnsatisfiableSpec):
        generate(spec)


def test_retry_cap_reached():
    # p is tiny, so 1000 draws of a 30x30 graph essentially never connect
    with pytest.raises(UnsatisfiableSpec, match=str(MAX_ATTEMPTS)):
        generate(GenSpec(30, 30, Gnp(0.01), seed=0, require_connected=True))


@pytest.mark.parametrize("seed", range(25))
@pytest.mark.parametrize("base", [Gnp(0.5), FixedM(12), Complete()])
def test_pendant_pair_instances(seed, base):
    g = generate(GenSpec(6, 5, WithPendantPair(base), seed=seed))
    assert "pendant-pair" in g.tags
    u, s = find_pendant_pair(g)
    assert g.deg_u(u) == 1 and g.deg_s(s) == 1
    assert not is_connected(g)
    base_part = BipartiteGraph(5, 4, [e for e in g.edges if e != (5, 4)])
    assert is_connected(base_part)


def test_pendant_pair_minimal_case():
    g = generate_with_pendant_pair(GenSpec(2, 2, Complete()))
    assert g.edges == {(0, 0), (1, 1)}
    assert find_pendant_pair(g) == (0, 0)
    assert project_sparse(g).isolated_vertices() == [0, 1]


def test_pendant_pair_complete_base_has_exactly_one_pair():
    g = generate_with_pendant_pair(GenSpec(4, 3, Complete()))
    pairs = [(u, s) for u, s in g.edges if g.deg_u(u) == 1 and g.deg_s(s) == 1]
    assert pairs == [(3, 2)]


def test_pendant_pair_needs_two_per_side():
    with pytest.raises(UnsatisfiableSpec):
        generate_with_pendant_pair(GenSpec(1, 3, Complete()))

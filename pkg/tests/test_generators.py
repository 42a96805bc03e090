import sys
from pathlib import Path

import numpy as np
import pytest
from scipy.stats import chisquare

sys.path.append(str(Path(__file__).resolve().parents[1]))

from graphcycles.config import Config
from graphcycles.models import LdpcGraph, Permutation
from graphcycles.services.errors import ConstructionError, InvalidParameterError
from graphcycles.services.generators import (
    build_ldpc_graph,
    build_turbo_graph,
    gen_random_permutation,
    gen_s_random_permutation,
    sample_nodes,
    verify_s_property,
)


def test_random_permutation_single_element():
    for seed in (0, 1, 2**64 - 1):
        assert gen_random_permutation(1, seed).map == (0,)


def test_random_permutation_is_deterministic():
    first = gen_random_permutation(2, 12345)
    assert first.map in ((0, 1), (1, 0))
    assert gen_random_permutation(2, 12345) == first
    assert gen_random_permutation(500, 7) == gen_random_permutation(500, 7)
    assert gen_random_permutation(500, 7) != gen_random_permutation(500, 8)


@pytest.mark.parametrize("n", [1, 3, 17, 1000])
def test_random_permutation_is_bijection(n):
    for seed in range(5):
        perm = gen_random_permutation(n, seed)
        assert sorted(perm.map) == list(range(n))


@pytest.mark.parametrize("n", [0, -3])
def test_random_permutation_rejects_empty(n):
    with pytest.raises(InvalidParameterError) as excinfo:
        gen_random_permutation(n, 1)
    assert excinfo.value.parameter == "n"


@pytest.mark.parametrize("seed", [-1, 2**64])
def test_seed_must_fit_64_bits(seed):
    with pytest.raises(InvalidParameterError):
        gen_random_permutation(4, seed)


def test_first_value_is_uniform_small_n():
    n = 20
    observed = np.bincount([gen_random_permutation(n, seed).map[0] for seed in range(4000)], minlength=n)
    assert chisquare(observed).pvalue > 0.001


@pytest.mark.slow
def test_first_value_is_uniform_large_n():
    n = 10_000
    values = np.array([gen_random_permutation(n, seed).map[0] for seed in range(n)])
    observed = np.bincount(values * 20 // n, minlength=20)
    assert chisquare(observed).pvalue > 0.001


def test_s_random_with_s_one_is_any_permutation():
    perm = gen_s_random_permutation(5, 1, seed=3, max_restarts=5)
    assert sorted(perm.map) == [0, 1, 2, 3, 4]
    assert verify_s_property(perm, 1)


def test_s_random_satisfies_spread_constraint():
    perm = gen_s_random_permutation(2000, 20, seed=11, max_restarts=Config().MAX_RESTARTS)
    assert sorted(perm.map) == list(range(2000))
    assert verify_s_property(perm, 20)


def test_s_random_is_deterministic():
    first = gen_s_random_permutation(300, 6, seed=5, max_restarts=100)
    assert gen_s_random_permutation(300, 6, seed=5, max_restarts=100) == first


def test_s_random_reports_exhausted_restarts():
    with pytest.raises(ConstructionError) as excinfo:
        gen_s_random_permutation(4, 4, seed=1, max_restarts=3, max_rejections=20)
    assert excinfo.value.attempts == 3


def test_s_random_logs_feasibility_warning(caplog):
    with caplog.at_level("WARNING"), pytest.raises(ConstructionError):
        gen_s_random_permutation(4, 4, seed=1, max_restarts=1, max_rejections=5)
    assert "sqrt(n/2)" in caplog.text


def test_verify_s_property_examples():
    identity = Permutation.identity(5)
    assert verify_s_property(identity, 1) is True
    assert verify_s_property(identity, 2) is False
    assert verify_s_property(Permutation.reversal(5), 2) is False


def test_verify_s_property_matches_pairwise_definition():
    perm = Permutation.from_values([3, 0, 4, 1, 5, 2])
    for s in range(1, 5):
        expected = all(
            abs(perm.map[i] - perm.map[j]) >= s
            for i in range(6)
            for j in range(6)
            if i != j and abs(i - j) <= s
        )
        assert verify_s_property(perm, s) is expected


def test_turbo_graph_single_node_per_chain():
    graph = build_turbo_graph(Permutation.identity(1))
    assert graph.node_count == 2
    assert graph.chain_edges() == []
    assert graph.cross_edges() == [((0, 0), (1, 0))]


def test_turbo_graph_degrees():
    assert build_turbo_graph(Permutation.identity(2)).degree_sequence() == [2, 2, 2, 2]
    graph = build_turbo_graph(Permutation.identity(3))
    assert graph.degree((0, 1)) == 3
    assert graph.degree((1, 1)) == 3
    assert graph.degree((0, 0)) == 2


def test_turbo_graph_structure():
    perm = gen_random_permutation(40, 9)
    graph = build_turbo_graph(perm)
    assert graph.node_count == 80
    assert len(graph.chain_edges()) == 2 * 39
    assert len(graph.cross_edges()) == 40
    for i in range(40):
        assert graph.partner((0, i)) == (1, perm.map[i])
        assert graph.partner((1, perm.map[i])) == (0, i)
    assert len(graph.undirected_edges()) == 2 * 39 + 40


def test_ldpc_graph_small_example():
    graph = build_ldpc_graph(10, 3, 6, seed=4, max_restarts=1000)
    assert graph.w == 5
    assert len(graph.edges) == 30
    assert len(set(graph.edges)) == 30
    assert graph.degree_sequence() == [3] * 10 + [6] * 5


def test_ldpc_graph_only_simple_two_by_two_graph():
    graph = build_ldpc_graph(2, 2, 2, seed=1, max_restarts=1000)
    assert sorted(graph.edges) == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_ldpc_graph_complete_bipartite_case():
    graph = build_ldpc_graph(3, 2, 3, seed=2, max_restarts=10_000)
    assert graph.w == 2
    assert sorted(graph.edges) == [(v, c) for v in range(3) for c in range(2)]


def test_ldpc_graph_is_deterministic():
    assert build_ldpc_graph(60, 3, 6, 99, 1000) == build_ldpc_graph(60, 3, 6, 99, 1000)


def test_ldpc_graph_rejects_indivisible_degrees():
    with pytest.raises(InvalidParameterError) as excinfo:
        build_ldpc_graph(10, 3, 7, seed=1, max_restarts=10)
    assert excinfo.value.parameter == "d_c"


def test_ldpc_graph_reports_exhausted_restarts():
    # the only simple (5, 6)-regular graph on 6 + 5 nodes is K_{6,5}
    with pytest.raises(ConstructionError) as excinfo:
        build_ldpc_graph(6, 5, 6, seed=1, max_restarts=3)
    assert excinfo.value.attempts == 3


def test_ldpc_graph_validates_degrees():
    with pytest.raises(InvalidParameterError):
        LdpcGraph(n=2, w=2, d_v=2, d_c=2, edges=((0, 0), (0, 1), (1, 0)))
    with pytest.raises(InvalidParameterError):
        LdpcGraph(n=2, w=2, d_v=2, d_c=2, edges=((0, 0), (0, 0), (1, 1), (1, 1)))


def test_sample_nodes_without_replacement():
    graph = build_turbo_graph(gen_random_permutation(50, 3))
    nodes = sample_nodes(graph, 100, seed=3)
    assert len(set(nodes)) == 100
    assert sample_nodes(graph, 10, seed=3) == sample_nodes(graph, 10, seed=3)
    with pytest.raises(InvalidParameterError):
        sample_nodes(graph, 101, seed=3)

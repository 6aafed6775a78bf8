from fractions import Fraction
from math import comb

import pytest
import sympy

from app.budget import Budget
from app.coefficients import (
    assemble_direct, codegree_coefficients, codegree_k_closed_forms, connected_contributions, harary_sachs_2graph,
    occurrence_count, simple_subgraph_count, threshold_f, threshold_search,
)
from app.exceptions import InvalidHypergraphError
from app.hypergraph import MultiHypergraph
from app.presets import gamma, resolve_preset, single_edge
from app.selftest import FANO_FAMILY_TABLE
from app.simplex import simplex
from tests.conftest import graph_to_hypergraph, small_atlas_graphs


def charpoly_coefficients(graph):
    x = sympy.Symbol("x")
    n = graph.number_of_nodes()
    matrix = sympy.zeros(n, n)
    for u, v in graph.edges():
        matrix[u, v] = matrix[v, u] = 1
    return [int(c) for c in matrix.charpoly(x).all_coeffs()]


def test_rowling_coefficients(rowling):
    vector = codegree_coefficients(rowling, 9)
    assert vector.complete
    assert [vector[d] for d in range(10)] == FANO_FAMILY_TABLE["rowling"][:10]
    assert vector.normalized_degree == 448


@pytest.mark.parametrize("name", ["fano", "fano-minus-1"])
def test_fano_family_low_codegrees(name):
    vector = codegree_coefficients(resolve_preset(name), 7)
    assert [vector[d] for d in range(8)] == FANO_FAMILY_TABLE[name][:8]


@pytest.mark.slow
@pytest.mark.parametrize("name", ["rowling", "fano-minus-1", "fano"])
def test_fano_family_table(name):
    vector = codegree_coefficients(resolve_preset(name), 12)
    assert [vector[d] for d in range(13)] == FANO_FAMILY_TABLE[name][:13]


def test_rowling_connected_contributions(rowling):
    total = sum(count * value for _, count, value in connected_contributions(rowling, 3))
    assert -(2 ** 7) * total == -240
    g6 = -(2 ** 7) * sum(count * value for _, count, value in connected_contributions(rowling, 6))
    g9 = -(2 ** 7) * sum(count * value for _, count, value in connected_contributions(rowling, 9))
    assert (g6, g9) == (-480, -2060)


@pytest.mark.parametrize("d", range(0, 7))
def test_direct_assembly_agrees_with_convolution(rowling, d):
    assert assemble_direct(rowling, d) == codegree_coefficients(rowling, d)[d]


def _assert_matches_characteristic_polynomial(graph):
    host = graph_to_hypergraph(graph)
    expected = charpoly_coefficients(graph)
    vector = codegree_coefficients(host, host.n)
    assert [vector[d] for d in range(host.n + 1)] == expected
    assert [harary_sachs_2graph(host, d) for d in range(host.n + 1)] == expected


def test_graphs_match_characteristic_polynomial():
    for graph in small_atlas_graphs(5):
        _assert_matches_characteristic_polynomial(graph)


@pytest.mark.slow
def test_six_vertex_graphs_match_characteristic_polynomial():
    for graph in small_atlas_graphs(6):
        if graph.number_of_nodes() == 6:
            _assert_matches_characteristic_polynomial(graph)


def test_triangle_and_path(triangle):
    vector = codegree_coefficients(triangle, 3)
    assert (vector[2], vector[3]) == (-3, -2)
    path = MultiHypergraph.from_edges(2, [(1, 2), (2, 3)])
    assert harary_sachs_2graph(path, 2) == -2
    assert codegree_coefficients(path, 2)[2] == -path.edge_count


def test_closed_forms():
    k4 = simplex(3)
    vector = codegree_coefficients(k4, 4)
    assert codegree_k_closed_forms(k4) == (vector[3], vector[4]) == (-24, -42)
    graph = resolve_preset("triangle")
    vector = codegree_coefficients(graph, 3)
    assert codegree_k_closed_forms(graph) == (vector[2], vector[3])


def test_closed_forms_on_rowling(rowling):
    assert codegree_k_closed_forms(rowling) == (-240, 0)


def test_occurrence_counts(rowling, triple_edge):
    assert occurrence_count(rowling, triple_edge) == 5
    assert occurrence_count(rowling, triple_edge.disjoint_union(triple_edge)) == Fraction(25, 2)
    assert occurrence_count(rowling, gamma("9,4").hypergraph) == 2
    assert occurrence_count(rowling, gamma("9,2").hypergraph) == 20


def test_subgraph_counts(rowling, fano):
    pair = MultiHypergraph.from_edges(3, [(1, 2, 3), (1, 4, 5)])
    assert simple_subgraph_count(rowling, pair) == 10
    assert simple_subgraph_count(fano, fano) == 1
    assert simple_subgraph_count(rowling, single_edge(4)) == 0
    assert simple_subgraph_count(rowling, MultiHypergraph.empty(3)) == 1


def test_host_must_be_simple(triple_edge):
    with pytest.raises(InvalidHypergraphError):
        codegree_coefficients(triple_edge, 3)


@pytest.mark.parametrize("v, expected", [(3, 9), (4, 18), (5, 36)])
def test_single_edge_thresholds(v, expected):
    host = single_edge(3)
    report = threshold_search(host, v, expected + 3)
    assert report.largest_nonzero == expected
    assert report.valid_through == expected + 3
    assert not report.notes
    width = 3 * 2 ** (v - 3)
    for d, value in report.values.items():
        assert value == ((-1) ** (d // 3) * comb(width, d // 3) if d % 3 == 0 else 0)


def test_threshold_at_host_size_is_the_coefficient(rowling):
    assert threshold_f(rowling, rowling.n, 6) == codegree_coefficients(rowling, 6)[6]


def test_threshold_note_at_search_bound():
    report = threshold_search(single_edge(3), 3, 6)
    assert report.largest_nonzero == 6
    assert report.notes


def test_time_budget_gives_partial_vector(rowling):
    vector = codegree_coefficients(rowling, 9, Budget(seconds=1e-9))
    assert not vector.complete
    assert vector.stopped_by is not None
    with pytest.raises(KeyError):
        vector[9]

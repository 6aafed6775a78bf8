from itertools import product

import pytest
import sympy

from app.digraph import (
    MultiDigraph, arborescence_count, bareiss_determinant, euler_circuit_count_best, euler_circuit_count_brute,
    euler_circuit_count_undirected, euler_orientations, is_eulerian,
)
from app.exceptions import CapExceededError, NotEulerianError, NotVeblenError
from app.hypergraph import MultiHypergraph

BIDIRECTED_TRIANGLE = MultiDigraph.from_arcs(3, [(1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2)])
DIRECTED_TRIANGLE = MultiDigraph.from_arcs(3, [(1, 2), (2, 3), (3, 1)])


def brute_arborescences(d: MultiDigraph, root: int) -> int:
    """Every non-root vertex picks one out-arc; keep the choices where all walks reach the root."""
    others = [v for v in range(1, d.n + 1) if v != root]
    choices = [[(arc, m) for arc, m in d.arcs if arc[0] == v] for v in others]
    total = 0
    for picked in product(*choices):
        succ = {arc[0]: arc[1] for arc, _ in picked}
        weight = 1
        for _, m in picked:
            weight *= m
        ok = True
        for v in others:
            seen, at = set(), v
            while at != root:
                if at in seen:
                    ok = False
                    break
                seen.add(at)
                at = succ[at]
            if not ok:
                break
        if ok:
            total += weight
    return total


CORPUS = [
    DIRECTED_TRIANGLE,
    BIDIRECTED_TRIANGLE,
    MultiDigraph.from_arcs(2, [((1, 2), 2), ((2, 1), 2)]),
    MultiDigraph.from_arcs(3, [((1, 2), 3), ((2, 1), 3), ((1, 3), 3), ((3, 1), 3), ((2, 3), 3), ((3, 2), 3)]),
    MultiDigraph.from_arcs(4, [(1, 2), (2, 3), (3, 1), (1, 4), (4, 1)]),
    MultiDigraph.from_arcs(4, [(1, 2), (2, 3), (3, 4), (4, 1), (1, 3), (3, 1)]),
    MultiDigraph.from_arcs(4, [(1, 2), (2, 1), (2, 3), (3, 2), (3, 4), (4, 3), (4, 1), (1, 4)]),
]


def test_arborescence_examples():
    assert arborescence_count(BIDIRECTED_TRIANGLE, 2) == 3
    assert arborescence_count(CORPUS[3], 1) == 27
    assert arborescence_count(MultiDigraph.from_arcs(2, [(1, 2), (2, 1)]), 1) == 1


def test_arborescences_vanish_when_disconnected():
    d = MultiDigraph.from_arcs(4, [(1, 2), (2, 1), (3, 4), (4, 3)])
    assert arborescence_count(d, 1) == 0


@pytest.mark.parametrize("digraph", CORPUS)
def test_matrix_tree_matches_brute_force_and_is_root_independent(digraph):
    counts = {arborescence_count(digraph, r) for r in range(1, digraph.n + 1)}
    assert counts == {brute_arborescences(digraph, 1)}


@pytest.mark.parametrize("digraph", [d for d in CORPUS if d.arc_count <= 12])
def test_best_matches_brute_force(digraph):
    assert euler_circuit_count_best(digraph) == euler_circuit_count_brute(digraph)


def test_bareiss_matches_sympy():
    matrices = [
        [[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
        [[0, 3, 1], [4, 0, 2], [7, 5, 0]],
        [[1, 2], [2, 4]],
        [[5, -3, 2, 1], [0, 0, 4, -2], [1, 1, 1, 1], [9, -7, 3, 0]],
    ]
    for m in matrices:
        assert bareiss_determinant(m) == sympy.Matrix(m).det()
    assert bareiss_determinant([]) == 1


def test_eulerian_tests():
    assert is_eulerian(DIRECTED_TRIANGLE)
    assert not is_eulerian(MultiDigraph.from_arcs(2, [(1, 2)]))
    two_cycles = MultiDigraph.from_arcs(6, [(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4)])
    assert not is_eulerian(two_cycles)
    assert euler_circuit_count_brute(two_cycles) == 0


def test_best_examples():
    assert euler_circuit_count_best(DIRECTED_TRIANGLE) == 1
    assert euler_circuit_count_best(BIDIRECTED_TRIANGLE) == 3
    assert euler_circuit_count_best(CORPUS[2]) == 2
    with pytest.raises(NotEulerianError):
        euler_circuit_count_best(MultiDigraph.from_arcs(2, [(1, 2)]))


def test_brute_force_cap():
    big = MultiDigraph.from_arcs(2, [((1, 2), 7), ((2, 1), 7)])
    with pytest.raises(CapExceededError):
        euler_circuit_count_brute(big)


def test_undirected_circuits(two_cycle, triangle):
    four_fold = MultiHypergraph.from_edges(2, [((1, 2), 4)])
    assert euler_circuit_count_undirected(two_cycle) == 2
    assert euler_circuit_count_undirected(triangle) == 2
    assert euler_circuit_count_undirected(four_fold) == 12


def test_orientations_group_parallel_edges(two_cycle, triangle):
    assert [ways for _, ways in euler_orientations(two_cycle)] == [2]
    assert sorted(ways for _, ways in euler_orientations(triangle)) == [1, 1]
    (digraph, ways), = euler_orientations(MultiHypergraph.from_edges(2, [((1, 2), 4)]))
    assert ways == 6
    assert digraph.multiplicities == {(1, 2): 2, (2, 1): 2}


def test_orientations_need_connected_even_graph(triangle):
    with pytest.raises(NotVeblenError):
        euler_orientations(MultiHypergraph.from_edges(2, [(1, 2), (2, 3)]))
    with pytest.raises(NotVeblenError):
        euler_orientations(triangle.disjoint_union(triangle))

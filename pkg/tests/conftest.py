import networkx as nx
import pytest

from app.hypergraph import MultiHypergraph
from app.presets import resolve_preset


def graph_to_hypergraph(graph: nx.Graph) -> MultiHypergraph:
    """networkx graph on 0..n-1 as a simple 2-graph on 1..n."""
    return MultiHypergraph.from_edges(2, [(u + 1, v + 1) for u, v in graph.edges()], n=graph.number_of_nodes())


def small_atlas_graphs(max_nodes: int = 5):
    return [g for g in nx.graph_atlas_g() if 1 <= g.number_of_nodes() <= max_nodes]


@pytest.fixture
def rowling():
    return resolve_preset("rowling")


@pytest.fixture
def fano():
    return resolve_preset("fano")


@pytest.fixture
def triangle():
    return resolve_preset("triangle")


@pytest.fixture
def two_cycle():
    return resolve_preset("two-cycle")


@pytest.fixture
def triple_edge():
    return MultiHypergraph.from_edges(3, [((1, 2, 3), 3)])

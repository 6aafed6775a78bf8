import pytest

from app.exceptions import HypergraphParseError, InvalidHypergraphError
from app.hypergraph import MultiHypergraph, parse_hypergraph


def test_parse_merges_repeated_edges():
    h = parse_hypergraph("k=3 n=5  # header\n1 2 3 x2\n3 2 1\n\n1 4 5\n")
    assert h.k == 3 and h.n == 5
    assert h.multiplicities == {(1, 2, 3): 3, (1, 4, 5): 1}
    assert h.edge_count == 4


def test_to_text_parses_back(rowling):
    assert parse_hypergraph(rowling.to_text()) == rowling


def test_parse_reports_line_and_column():
    with pytest.raises(HypergraphParseError) as info:
        parse_hypergraph("k=3 n=5\n1 2 x\n")
    assert info.value.line == 2
    assert info.value.column == 6
    assert "line 2, column 6" in str(info.value)


@pytest.mark.parametrize("text", [
    "1 2 3\n",
    "k=3 n=4\n1 2 7\n",
    "k=3 n=4\n1 1 2\n",
    "k=3 n=4\n1 2\n",
    "k=3 n=4\n1 2 3 x0\n",
    "k=1 n=4\n",
])
def test_parse_rejects_malformed_input(text):
    with pytest.raises(HypergraphParseError):
        parse_hypergraph(text)


def test_constructor_validates_edges():
    with pytest.raises(InvalidHypergraphError):
        MultiHypergraph(k=3, n=3, edges=(((1, 2, 4), 1),))
    with pytest.raises(InvalidHypergraphError):
        MultiHypergraph(k=3, n=3, edges=(((1, 2, 3), 0),))
    with pytest.raises(InvalidHypergraphError):
        MultiHypergraph.from_edges(1, [(1,)])


def test_flatten_and_veblen(triple_edge):
    assert triple_edge.is_veblen()
    assert triple_edge.flatten().multiplicities == {(1, 2, 3): 1}
    assert not triple_edge.flatten().is_veblen()
    assert triple_edge.flatten().is_simple()


def test_components_keep_original_labels():
    h = MultiHypergraph.from_edges(2, [(1, 2), (3, 4), (4, 5)], n=6)
    parts = h.connected_components()
    assert [p.distinct_edges for p in parts] == [[(1, 2)], [(3, 4), (4, 5)]]
    assert all(p.n == 6 for p in parts)
    assert h.component_count() == 2
    assert not h.is_connected()
    assert parts[1].compact().distinct_edges == [(1, 2), (2, 3)]


def test_disjoint_union_shifts_labels(triple_edge):
    union = triple_edge.disjoint_union(triple_edge)
    assert union.n == 6
    assert union.multiplicities == {(1, 2, 3): 3, (4, 5, 6): 3}
    assert union.component_count() == 2


def test_short_label(triple_edge):
    assert triple_edge.short_label() == "(123)^3"
    assert MultiHypergraph.empty(3).short_label() == "(empty)"

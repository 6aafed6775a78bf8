import pytest

from app.canonical import canonical_key
from app.exceptions import CapExceededError, InvalidHypergraphError
from app.hypergraph import MultiHypergraph
from app.presets import gamma
from app.selftest import ALL_VEBLEN_COUNTS_K3, CONNECTED_VEBLEN_COUNTS_K3
from app.veblen import (
    VeblenClass, all_veblen_class_counts, connected_placement_counts, connected_veblen_classes, veblen_classes,
    veblen_infragraphs, veblen_vectors,
)


@pytest.mark.parametrize("d", range(1, 7))
def test_connected_counts_k3(d):
    assert len(connected_veblen_classes(3, d)) == CONNECTED_VEBLEN_COUNTS_K3[d - 1]


@pytest.mark.parametrize("d", range(1, 7))
def test_all_counts_k3(d):
    assert len(veblen_classes(3, d)) == ALL_VEBLEN_COUNTS_K3[d - 1]
    assert all_veblen_class_counts(3, d) == ALL_VEBLEN_COUNTS_K3[d - 1]


@pytest.mark.slow
@pytest.mark.parametrize("d", [7, 8])
def test_connected_counts_k3_large(d):
    assert len(connected_veblen_classes(3, d)) == CONNECTED_VEBLEN_COUNTS_K3[d - 1]
    assert all_veblen_class_counts(3, d) == ALL_VEBLEN_COUNTS_K3[d - 1]


def test_connected_counts_k2():
    assert [len(connected_veblen_classes(2, d)) for d in (1, 2, 3, 4)] == [0, 1, 1, 3]


def test_classes_are_veblen_and_distinct():
    classes = veblen_classes(3, 6)
    assert all(c.representative.is_veblen() for c in classes)
    assert len({c.key for c in classes}) == len(classes)
    assert sum(1 for c in classes if c.component_count == 2) == 1


def test_catalogue_entries_appear_among_classes():
    keys = {c.key for c in connected_veblen_classes(3, 6)}
    for n in range(1, 11):
        assert canonical_key(gamma(f"6,{n}").hypergraph) in keys


def test_empty_class():
    (empty,) = veblen_classes(3, 0)
    assert empty.edge_count == 0
    assert connected_veblen_classes(3, 0) == []


def test_class_cap():
    with pytest.raises(CapExceededError):
        connected_veblen_classes(3, 6, max_classes=1)


def test_bad_uniformity():
    with pytest.raises(InvalidHypergraphError):
        connected_veblen_classes(1, 3)


def test_aut_ratio():
    assert VeblenClass.of(gamma("6,3").hypergraph).aut_ratio() == 2
    assert VeblenClass.of(gamma("6,2").hypergraph).aut_ratio() == 1


def test_vectors_of_rowling(rowling):
    assert len(list(veblen_vectors(rowling, 3))) == 5
    assert all(h.is_veblen() for h in veblen_vectors(rowling, 6))
    (empty,) = veblen_vectors(rowling, 0)
    assert empty.edge_count == 0


def test_infragraph_decomposition(rowling):
    decompositions = veblen_infragraphs(rowling, 3)
    assert all(dec.component_count == 1 and dec.total == 3 for dec in decompositions)


def test_rowling_placements_at_nine(rowling):
    placements = connected_placement_counts(rowling, 9)
    by_class = {key: p.count for key, p in placements.items()}
    triple9 = canonical_key(MultiHypergraph.from_edges(3, [((1, 2, 3), 9)]))
    assert by_class[triple9] == 5
    assert by_class[canonical_key(gamma("9,2").hypergraph)] == 20
    assert by_class[canonical_key(gamma("9,3").hypergraph)] == 8
    assert by_class[canonical_key(gamma("9,4").hypergraph)] == 2
    assert len(by_class) == 4

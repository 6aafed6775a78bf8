import pytest

from app.canonical import canonical_key
from app.exceptions import InvalidHypergraphError
from app.presets import GAMMA_CATALOG, gamma, parse_short_label, preset_names, resolve_preset, single_edge
from app.simplex import simplex


def test_short_labels():
    h = parse_short_label(3, "(123)^3(145)^3")
    assert h.multiplicities == {(1, 2, 3): 3, (1, 4, 5): 3}
    wide = parse_short_label(3, "(1,2,10)(3,4,10)")
    assert wide.n == 10
    assert parse_short_label(3, h.short_label()) == h


def test_catalogue_is_connected_veblen():
    assert len(GAMMA_CATALOG) == 21
    for entry in GAMMA_CATALOG:
        h = entry.hypergraph
        assert h.is_veblen() and h.is_connected()
        assert h.edge_count == int(entry.name.split(",")[0])
    assert len({canonical_key(entry.hypergraph) for entry in GAMMA_CATALOG}) == 21


def test_lookup():
    assert gamma("9,4").preset_name == "gamma-9-4"
    assert resolve_preset("gamma-9-4") == gamma("9,4").hypergraph
    with pytest.raises(KeyError):
        gamma("7,1")


def test_parametric_presets():
    assert resolve_preset("simplex-4") == simplex(4)
    assert resolve_preset("Single-Edge-5") == single_edge(5)
    with pytest.raises(InvalidHypergraphError):
        resolve_preset("simplex-1")
    with pytest.raises(InvalidHypergraphError):
        resolve_preset("petersen")


def test_fano_family(fano, rowling):
    fano_minus = resolve_preset("fano-minus-1")
    assert (rowling.edge_count, fano_minus.edge_count, fano.edge_count) == (5, 6, 7)
    assert all(d == 3 for d in fano.degrees().values())
    assert fano.is_linear()
    assert "rowling" in preset_names()


def test_non_veblen_printed_lists_are_corrected():
    corrected = [entry for entry in GAMMA_CATALOG if entry.corrected_label]
    assert [entry.name for entry in corrected] == ["6,6", "6,7"]
    for entry in corrected:
        assert not parse_short_label(3, entry.label).is_veblen()
        assert entry.hypergraph.is_veblen()

"""Built-in hypergraphs: the Fano family, simplices, single edges and a catalogue of small Veblen 3-graphs."""
import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional

from app.exceptions import InvalidHypergraphError
from app.hypergraph import MultiHypergraph
from app.simplex import simplex

logger = logging.getLogger(__name__)

ROWLING_EDGES = [(1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 5, 6), (3, 5, 7)]
FANO_EDGES = ROWLING_EDGES + [(2, 4, 7), (3, 4, 6)]
FANO_MINUS_ONE_EDGES = ROWLING_EDGES + [(2, 4, 7)]

_LABEL_TERM = re.compile(r"\((\d+(?:,\d+)*)\)(?:\^(\d+))?")


def parse_short_label(k: int, text: str) -> MultiHypergraph:
    """Read edge-list notation such as (123)^3(145)^3; labels above 9 need commas: (1,10,11)."""
    text = text.replace(" ", "")
    position, edges = 0, []
    for match in _LABEL_TERM.finditer(text):
        if match.start() != position:
            raise InvalidHypergraphError(f"cannot read {text!r} at offset {position}")
        body, power = match.group(1), match.group(2)
        vertices = [int(v) for v in body.split(",")] if "," in body else [int(ch) for ch in body]
        edges.append((tuple(vertices), int(power or 1)))
        position = match.end()
    if position != len(text) or not edges:
        raise InvalidHypergraphError(f"cannot read {text!r} at offset {position}")
    return MultiHypergraph.from_edges(k, edges)


@dataclass(frozen=True)
class GammaEntry:
    """A connected Veblen 3-graph with the C value and Aut ratio printed for it in the reference table."""
    name: str
    label: str
    printed_coefficient: Fraction
    printed_aut_ratio: int
    # set when the printed edge list is not Veblen; the class it stands for
    corrected_label: Optional[str] = None

    @property
    def hypergraph(self) -> MultiHypergraph:
        return parse_short_label(3, self.corrected_label or self.label)

    @property
    def preset_name(self) -> str:
        return "gamma-" + self.name.replace(",", "-")


_GAMMA_ROWS = [
    ("5,1", "(123)(125)(145)(234)(345)", "51/16", 1),
    ("5,2", "(123)(145)(145)(234)(235)", "27/16", 1),
    ("6,1", "(123)^3(124)^3", "9/8", 1),
    ("6,2", "(123)^3(145)^3", "9/32", 1),
    ("6,3", "(123)^2(124)(135)(145)^2", "99/32", 2),
    ("6,4", "(123)(124)(125)(134)(135)(145)", "213/16", 1),
    ("6,5", "(123)(124)(156)(256)(345)(346)", "69/16", 1),
    ("6,6", "(123)(124)(145)(246)^3", "63/32", 1, "(123)(124)(145)(246)(356)^2"),
    ("6,7", "(123)(134)(145)(246)(256)^2", "129/32", 1, "(123)(134)(145)(246)(256)(356)"),
    ("6,8", "(123)^2(124)(356)(456)^2", "27/32", 2),
    ("6,9", "(123)(124)(134)(256)(356)(456)", "63/16", 1),
    ("6,10", "(123)(124)(135)(246)(356)(456)", "117/16", 1),
    ("9,2", "(123)^6(145)^3", "9/32", 2),
    ("9,3", "(123)^3(145)^3(246)^3", "9/8", 1),
    ("9,4", "(123)^3(145)^3(167)^3", "81/128", 1),
    ("12,1", "(123)^9(145)^3", "9/32", 2),
    ("12,2", "(123)^6(145)^6", "27/64", 1),
    ("12,3", "(123)^6(145)^3(167)^3", "81/128", 3),
    ("12,4", "(123)^6(145)^3(246)^3", "63/32", 3),
    ("12,5", "(123)^3(145)^3(167)^3(246)^3", "459/64", 1),
    ("12,6", "(123)^3(145)^3(246)^3(356)^3", "255/16", 1),
]

GAMMA_CATALOG: List[GammaEntry] = [
    GammaEntry(name, label, Fraction(value), ratio, *corrected) for name, label, value, ratio, *corrected in _GAMMA_ROWS
]


def gamma_catalog() -> List[GammaEntry]:
    return list(GAMMA_CATALOG)


def gamma(name: str) -> GammaEntry:
    """Look up an entry by its index pair, e.g. `gamma("9,4")`."""
    for entry in GAMMA_CATALOG:
        if entry.name == name:
            return entry
    raise KeyError(f"no catalogue entry {name!r}")


def single_edge(k: int) -> MultiHypergraph:
    return MultiHypergraph.from_edges(k, [tuple(range(1, k + 1))])


PRESETS: Dict[str, MultiHypergraph] = {
    "rowling": MultiHypergraph.from_edges(3, ROWLING_EDGES, n=7),
    "fano": MultiHypergraph.from_edges(3, FANO_EDGES, n=7),
    "fano-minus-1": MultiHypergraph.from_edges(3, FANO_MINUS_ONE_EDGES, n=7),
    "triangle": MultiHypergraph.from_edges(2, [(1, 2), (1, 3), (2, 3)]),
    "two-cycle": MultiHypergraph.from_edges(2, [((1, 2), 2)]),
}
PRESETS.update({entry.preset_name: entry.hypergraph for entry in GAMMA_CATALOG})

_PARAMETRIC = re.compile(r"^(simplex|single-edge)-(\d+)$")


def preset_names() -> List[str]:
    """Fixed presets plus one example of each parametric family."""
    return sorted(PRESETS) + ["simplex-<k>", "single-edge-<k>"]


def resolve_preset(name: str) -> MultiHypergraph:
    name = name.strip().lower()
    if name in PRESETS:
        return PRESETS[name]
    match = _PARAMETRIC.match(name)
    if match:
        family, k = match.group(1), int(match.group(2))
        if k < 2:
            raise InvalidHypergraphError(f"preset {name!r} needs k >= 2")
        return simplex(k) if family == "simplex" else single_edge(k)
    raise InvalidHypergraphError(f"unknown preset {name!r}; known presets: {', '.join(preset_names())}")

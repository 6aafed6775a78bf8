"""
k-uniform multi-hypergraphs: the object every other module consumes.

Vertices are the integers 1..n. Edges are stored as sorted k-tuples mapped to a
multiplicity; copies of an edge are indistinguishable.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx

from app.exceptions import HypergraphParseError, InvalidHypergraphError

logger = logging.getLogger(__name__)

Edge = Tuple[int, ...]
EdgeSpec = Union[Sequence[int], Tuple[Sequence[int], int]]


@dataclass(frozen=True)
class MultiHypergraph:
    k: int
    n: int
    edges: Tuple[Tuple[Edge, int], ...]

    def __post_init__(self):
        if self.k < 2:
            raise InvalidHypergraphError(f"uniformity must be at least 2, got k={self.k}")
        if self.n < 0:
            raise InvalidHypergraphError(f"vertex count must be non-negative, got n={self.n}")
        if self.edges and self.n < self.k:
            raise InvalidHypergraphError(f"n={self.n} is smaller than k={self.k} but edges are present")
        previous = None
        for edge, mult in self.edges:
            if len(edge) != self.k or len(set(edge)) != self.k:
                raise InvalidHypergraphError(f"edge {edge} is not a set of {self.k} distinct vertices")
            if tuple(sorted(edge)) != edge:
                raise InvalidHypergraphError(f"edge {edge} is not sorted")
            if edge[0] < 1 or edge[-1] > self.n:
                raise InvalidHypergraphError(f"edge {edge} uses a label outside 1..{self.n}")
            if mult < 1:
                raise InvalidHypergraphError(f"edge {edge} has multiplicity {mult}")
            if previous is not None and edge <= previous:
                raise InvalidHypergraphError("edges must be listed once, in sorted order")
            previous = edge

    @classmethod
    def from_edges(cls, k: int, edges: Iterable[EdgeSpec], n: Optional[int] = None) -> "MultiHypergraph":
        """
        Build from `[(1, 2, 3), ((1, 4, 5), 3), ...]`; repeated edges add up.
        `n` defaults to the largest label used.
        """
        counts: Counter = Counter()
        for spec in edges:
            if len(spec) == 2 and isinstance(spec[0], (tuple, list)):
                vertices, mult = spec
            else:
                vertices, mult = spec, 1
            counts[tuple(sorted(vertices))] += mult
        if n is None:
            n = max((max(e) for e in counts), default=0)
        return cls(k=k, n=n, edges=tuple(sorted(counts.items())))

    @classmethod
    def from_multiplicities(cls, k: int, n: int, multiplicities: Mapping[Edge, int]) -> "MultiHypergraph":
        items = tuple(sorted((tuple(sorted(e)), m) for e, m in multiplicities.items() if m > 0))
        return cls(k=k, n=n, edges=items)

    @classmethod
    def empty(cls, k: int, n: int = 0) -> "MultiHypergraph":
        return cls(k=k, n=n, edges=())

    # -- basic measurements -------------------------------------------------

    @property
    def multiplicities(self) -> Dict[Edge, int]:
        return dict(self.edges)

    @property
    def edge_count(self) -> int:
        """Total edge count d, multiplicities included."""
        return sum(m for _, m in self.edges)

    @property
    def distinct_edges(self) -> List[Edge]:
        return [e for e, _ in self.edges]

    def degrees(self) -> Dict[int, int]:
        deg = {v: 0 for v in range(1, self.n + 1)}
        for edge, mult in self.edges:
            for v in edge:
                deg[v] += mult
        return deg

    def used_vertices(self) -> List[int]:
        return sorted({v for e, _ in self.edges for v in e})

    def is_simple(self) -> bool:
        return all(m == 1 for _, m in self.edges)

    def is_linear(self) -> bool:
        """Every two distinct edges share at most one vertex."""
        es = self.distinct_edges
        return all(len(set(a) & set(b)) <= 1 for i, a in enumerate(es) for b in es[i + 1:])

    # -- operations ---------------------------------------------------------

    def flatten(self) -> "MultiHypergraph":
        return MultiHypergraph(k=self.k, n=self.n, edges=tuple((e, 1) for e, _ in self.edges))

    def is_veblen(self) -> bool:
        return all(d % self.k == 0 for d in self.degrees().values())

    def _incidence_graph(self) -> nx.Graph:
        graph = nx.Graph()
        for edge, _ in self.edges:
            nx.add_path(graph, edge)
        return graph

    def connected_components(self) -> List["MultiHypergraph"]:
        """
        Maximal connected pieces of the edge multiset, on the original labels
        and vertex count; isolated vertices belong to no component.
        """
        if not self.edges:
            return []
        mult = self.multiplicities
        pieces = []
        for vertex_set in nx.connected_components(self._incidence_graph()):
            part = {e: mult[e] for e in mult if e[0] in vertex_set}
            pieces.append(MultiHypergraph.from_multiplicities(self.k, self.n, part))
        pieces.sort(key=lambda h: h.edges[0][0])
        return pieces

    def component_count(self) -> int:
        if not self.edges:
            return 0
        return nx.number_connected_components(self._incidence_graph())

    def is_connected(self) -> bool:
        return self.component_count() == 1

    def relabel(self, mapping: Mapping[int, int], n: Optional[int] = None) -> "MultiHypergraph":
        target_n = self.n if n is None else n
        counts: Counter = Counter()
        for edge, mult in self.edges:
            counts[tuple(sorted(mapping[v] for v in edge))] += mult
        return MultiHypergraph(k=self.k, n=target_n, edges=tuple(sorted(counts.items())))

    def compact(self) -> "MultiHypergraph":
        """Drop isolated vertices and relabel the rest to 1..m in order."""
        used = self.used_vertices()
        mapping = {v: i for i, v in enumerate(used, start=1)}
        return self.relabel(mapping, n=len(used))

    def add_edge(self, edge: Sequence[int], mult: int = 1) -> "MultiHypergraph":
        edge = tuple(sorted(edge))
        counts = self.multiplicities
        counts[edge] = counts.get(edge, 0) + mult
        n = max(self.n, max(edge))
        return MultiHypergraph.from_multiplicities(self.k, n, counts)

    def scaled(self, factor: int) -> "MultiHypergraph":
        """Every multiplicity multiplied by `factor`."""
        return MultiHypergraph(k=self.k, n=self.n, edges=tuple((e, m * factor) for e, m in self.edges))

    def disjoint_union(self, other: "MultiHypergraph") -> "MultiHypergraph":
        if other.k != self.k:
            raise InvalidHypergraphError(f"cannot join a {self.k}-graph with a {other.k}-graph")
        shifted = tuple((tuple(v + self.n for v in e), m) for e, m in other.edges)
        return MultiHypergraph(k=self.k, n=self.n + other.n, edges=self.edges + shifted)

    def sub_hypergraph(self, multiplicities: Mapping[Edge, int]) -> "MultiHypergraph":
        """Infragraph on the same labels; every edge must exist in this hypergraph."""
        for e in multiplicities:
            if e not in self.multiplicities:
                raise InvalidHypergraphError(f"edge {e} is not an edge of the host")
        return MultiHypergraph.from_multiplicities(self.k, self.n, multiplicities)

    # -- text format --------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"k={self.k} n={self.n}"]
        for edge, mult in self.edges:
            body = " ".join(str(v) for v in edge)
            lines.append(body if mult == 1 else f"{body} x{mult}")
        return "\n".join(lines) + "\n"

    def short_label(self) -> str:
        """Compact edge-list notation such as (123)^3(145)^3."""
        parts = []
        for edge, mult in self.edges:
            sep = "" if self.n < 10 else ","
            body = "(" + sep.join(str(v) for v in edge) + ")"
            parts.append(body if mult == 1 else f"{body}^{mult}")
        return "".join(parts) or "(empty)"


def parse_hypergraph(text: str) -> MultiHypergraph:
    """
    Parse the text format:

        k=3 n=7        # header
        1 2 3 x6       # edge with multiplicity 6
        1 4 5

    `#` starts a comment; blank lines are ignored.
    """
    k = n = None
    counts: Counter = Counter()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        tokens = _tokens_with_columns(line)
        if k is None:
            k, n = _parse_header(tokens, lineno)
            continue
        vertices, mult = [], 1
        for column, token in tokens:
            if token.startswith("x"):
                if mult != 1 or not vertices:
                    raise HypergraphParseError(f"unexpected multiplicity {token!r}", lineno, column)
                mult = _parse_int(token[1:], lineno, column + 1)
                if mult < 1:
                    raise HypergraphParseError("multiplicity must be at least 1", lineno, column + 1)
                continue
            if mult != 1:
                raise HypergraphParseError("multiplicity must be the last token", lineno, column)
            label = _parse_int(token, lineno, column)
            if not 1 <= label <= n:
                raise HypergraphParseError(f"vertex {label} outside 1..{n}", lineno, column)
            vertices.append(label)
        if len(vertices) != k or len(set(vertices)) != k:
            raise HypergraphParseError(f"expected {k} distinct vertices, got {len(vertices)}", lineno, tokens[0][0])
        counts[tuple(sorted(vertices))] += mult
    if k is None:
        raise HypergraphParseError("missing header 'k=<int> n=<int>'", 1, 1)
    try:
        return MultiHypergraph(k=k, n=n, edges=tuple(sorted(counts.items())))
    except InvalidHypergraphError as exc:
        raise HypergraphParseError(str(exc), 1, 1) from exc


def _tokens_with_columns(line: str) -> List[Tuple[int, str]]:
    tokens, column, current = [], 0, ""
    for i, ch in enumerate(line, start=1):
        if ch.isspace():
            if current:
                tokens.append((column, current))
                current = ""
        else:
            if not current:
                column = i
            current += ch
    if current:
        tokens.append((column, current))
    return tokens


def _parse_header(tokens: List[Tuple[int, str]], lineno: int) -> Tuple[int, int]:
    values = {}
    for column, token in tokens:
        key, sep, value = token.partition("=")
        if not sep or key not in ("k", "n"):
            raise HypergraphParseError(f"bad header token {token!r}", lineno, column)
        values[key] = _parse_int(value, lineno, column + len(key) + 1)
    if set(values) != {"k", "n"}:
        raise HypergraphParseError("header must define both k and n", lineno, 1)
    if values["k"] < 2:
        raise HypergraphParseError("k must be at least 2", lineno, 1)
    return values["k"], values["n"]


def _parse_int(token: str, lineno: int, column: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise HypergraphParseError(f"expected an integer, got {token!r}", lineno, column)

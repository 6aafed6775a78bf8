"""
Associated coefficients of Veblen hypergraphs.

C_H is a weighted sum over Euler rootings R of tau(D_R) / prod deg-(v). Copies
of an edge are indistinguishable, so a rooting is stored as root counts
r[e][v] and carries the weight prod_v n_v! / prod_e r[e][v]!, the number of
star orderings with non-decreasing roots that realize it.
"""
import logging
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

from app.canonical import canonical_relabelling
from app.config import COEFFICIENT_CACHE_SIZE, MAX_CANONICAL_VERTICES, MAX_PARTITION_EDGES
from app.digraph import MultiDigraph, arborescence_count, euler_circuit_count_undirected, is_eulerian
from app.exceptions import CapExceededError, InvalidHypergraphError, NotVeblenError
from app.hypergraph import Edge, MultiHypergraph

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class Rooting:
    """Per distinct edge, the number of copies rooted at each of its vertices (aligned with the edge)."""
    counts: Tuple[Tuple[Edge, Tuple[int, ...]], ...]

    def roots(self, edge: Edge) -> Tuple[int, ...]:
        """The multiset of roots of `edge`, as a sorted tuple."""
        for e, row in self.counts:
            if e == edge:
                return tuple(v for v, c in zip(e, row) for _ in range(c))
        raise KeyError(edge)

    def vertex_loads(self) -> Counter:
        """n_v: how many edge copies are rooted at v."""
        loads: Counter = Counter()
        for edge, row in self.counts:
            for v, c in zip(edge, row):
                loads[v] += c
        return loads

    def validate(self, h: MultiHypergraph) -> None:
        mult = h.multiplicities
        if sorted(e for e, _ in self.counts) != sorted(mult):
            raise InvalidHypergraphError("rooting does not cover the edges of the hypergraph")
        for edge, row in self.counts:
            if len(row) != len(edge) or any(c < 0 for c in row) or sum(row) != mult[edge]:
                raise InvalidHypergraphError(f"root counts {row} do not fit edge {edge} x{mult[edge]}")


def rooted_digraph(h: MultiHypergraph, rooting: Rooting) -> MultiDigraph:
    """Union of the stars S_e(root) over every edge copy."""
    arcs = []
    for edge, row in rooting.counts:
        for root, copies in zip(edge, row):
            if copies:
                arcs.extend(((root, v), copies) for v in edge if v != root)
    return MultiDigraph.from_arcs(h.n, arcs)


def _compositions(total: int, caps: List[int]) -> Iterator[Tuple[int, ...]]:
    """All ways to write `total` as an ordered sum with part i at most caps[i]."""
    if len(caps) == 1:
        if total <= caps[0]:
            yield (total,)
        return
    for first in range(min(total, caps[0]), -1, -1):
        for rest in _compositions(total - first, caps[1:]):
            yield (first,) + rest


def enumerate_euler_rootings(h: MultiHypergraph) -> List[Rooting]:
    """
    Backtracking over per-edge root-count vectors. The balance condition
    k * n_v = deg(v) is enforced as a running budget per vertex and closed off
    at the last edge containing that vertex.
    """
    if not h.is_veblen():
        raise NotVeblenError(f"{h.short_label()} is not Veblen")
    if not h.edges:
        return []
    need = {v: deg // h.k for v, deg in h.degrees().items()}
    last_edge: Dict[int, int] = {}
    for index, (edge, _) in enumerate(h.edges):
        for v in edge:
            last_edge[v] = index

    found: List[Rooting] = []
    chosen: List[Tuple[Edge, Tuple[int, ...]]] = []

    def assign(index: int) -> None:
        if index == len(h.edges):
            rooting = Rooting(tuple(chosen))
            if is_eulerian(rooted_digraph(h, rooting)):
                found.append(rooting)
            return
        edge, mult = h.edges[index]
        for row in _compositions(mult, [need[v] for v in edge]):
            for v, c in zip(edge, row):
                need[v] -= c
            if all(need[v] == 0 for v in edge if last_edge[v] == index):
                chosen.append((edge, row))
                assign(index + 1)
                chosen.pop()
            for v, c in zip(edge, row):
                need[v] += c

    assign(0)
    logger.debug(f"{h.short_label()}: {len(found)} Euler rootings")
    return found


def rooting_multiplicity(h: MultiHypergraph, rooting: Rooting) -> int:
    weight = 1
    for load in rooting.vertex_loads().values():
        weight *= math.factorial(load)
    for _, row in rooting.counts:
        for c in row:
            weight //= math.factorial(c)
    return weight


def _connected_coefficient(h: MultiHypergraph) -> Fraction:
    """C_H for a connected Veblen hypergraph on 1..m without isolated vertices."""
    # every Euler rooting has deg-(v) = (k-1) deg(v) / k
    denominator = 1
    for deg in h.degrees().values():
        denominator *= (h.k - 1) * deg // h.k
    total = 0
    for rooting in enumerate_euler_rootings(h):
        total += rooting_multiplicity(h, rooting) * arborescence_count(rooted_digraph(h, rooting), 1)
    return Fraction(total, denominator)


@lru_cache(maxsize=COEFFICIENT_CACHE_SIZE)
def _class_coefficient(representative: MultiHypergraph) -> Fraction:
    value = _connected_coefficient(representative)
    logger.debug(f"C{representative.short_label()} = {value}")
    return value


def associated_coefficient(h: MultiHypergraph) -> Fraction:
    """C_H; multiplicative over connected components, 1 for the empty hypergraph."""
    if not h.is_veblen():
        raise NotVeblenError(f"{h.short_label()} is not Veblen")
    result = Fraction(1)
    for component in h.connected_components():
        core = component.compact()
        if core.n > MAX_CANONICAL_VERTICES:
            result *= _connected_coefficient(core)
            continue
        result *= _class_coefficient(canonical_relabelling(core))
    return result


def clear_coefficient_cache() -> None:
    _class_coefficient.cache_clear()


def coefficient_cache_size() -> int:
    return _class_coefficient.cache_info().currsize


def _check_connected_veblen_graph(g: MultiHypergraph) -> None:
    if g.k != 2:
        raise InvalidHypergraphError(f"expected a 2-graph, got k={g.k}")
    if not g.is_veblen():
        raise NotVeblenError(f"{g.short_label()} has a vertex of odd degree")
    if not g.is_connected():
        raise NotVeblenError(f"{g.short_label()} is not connected")


def associated_coefficient_2graph(g: MultiHypergraph) -> Fraction:
    """Euler circuits with distinguishable edges, divided by prod m(e)!."""
    _check_connected_veblen_graph(g)
    denominator = 1
    for _, mult in g.edges:
        denominator *= math.factorial(mult)
    return Fraction(euler_circuit_count_undirected(g), denominator)


def partition_sum(g: MultiHypergraph) -> Fraction:
    """
    Sum over multiset partitions P of the edge multiset of G into connected
    Veblen parts of (-1)^|P| prod C_part, with identical repeated parts
    weighted by 1 / prod a_j! (a_j = copies of the j-th distinct part).
    """
    _check_connected_veblen_graph(g)
    if g.edge_count > MAX_PARTITION_EDGES:
        raise CapExceededError("partition sum edge cap", MAX_PARTITION_EDGES, g.edge_count)
    edges = g.distinct_edges
    full = tuple(m for _, m in g.edges)

    candidates = []
    for vector in _sub_vectors(full):
        part = g.sub_hypergraph({e: m for e, m in zip(edges, vector) if m})
        if part.is_veblen() and part.is_connected():
            candidates.append((vector, associated_coefficient(part)))
    candidates.sort(reverse=True)

    def split(remaining: Tuple[int, ...], upper: Tuple[int, ...]) -> Iterator[List[Tuple[Tuple[int, ...], Fraction]]]:
        if not any(remaining):
            yield []
            return
        for vector, value in candidates:
            if vector > upper or any(a > b for a, b in zip(vector, remaining)):
                continue
            rest = tuple(b - a for a, b in zip(vector, remaining))
            for tail in split(rest, vector):
                yield [(vector, value)] + tail

    total = Fraction(0)
    for parts in split(full, full):
        term = Fraction((-1) ** len(parts))
        for _, value in parts:
            term *= value
        for copies in Counter(vector for vector, _ in parts).values():
            term /= math.factorial(copies)
        total += term
    return total


def _sub_vectors(full: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
    """Every non-zero vector bounded componentwise by `full`."""
    def grow(prefix: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
        if len(prefix) == len(full):
            if any(prefix):
                yield prefix
            return
        for m in range(full[len(prefix)] + 1):
            yield from grow(prefix + (m,))

    return grow(())

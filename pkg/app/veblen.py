"""
Veblen k-graphs: isomorphism classes with d edges, and Veblen infragraphs of a host.

Free enumeration grows connected multi-hypergraphs one edge at a time and
keeps one representative per canonical key at every level. A partial graph
with r edges still to place survives only if each vertex can still reach a
degree divisible by k (deficit at most r) and the deficits fit into k*r
incidences.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Tuple

from app.budget import Budget
from app.canonical import CanonicalKey, aut_order, canonical_key, canonical_relabelling
from app.config import MAX_CLASSES
from app.exceptions import CapExceededError, InvalidHypergraphError
from app.hypergraph import Edge, MultiHypergraph

logger = logging.getLogger(__name__)

_connected_cache: Dict[Tuple[int, int], List["VeblenClass"]] = {}


@dataclass(frozen=True)
class VeblenClass:
    representative: MultiHypergraph
    key: CanonicalKey

    @classmethod
    def of(cls, h: MultiHypergraph) -> "VeblenClass":
        return cls(representative=canonical_relabelling(h), key=canonical_key(h))

    @property
    def k(self) -> int:
        return self.representative.k

    @property
    def edge_count(self) -> int:
        return self.representative.edge_count

    @property
    def component_count(self) -> int:
        return self.representative.component_count()

    def aut_ratio(self) -> Fraction:
        """|Aut(flattening)| / |Aut(class)|."""
        rep = self.representative
        return Fraction(aut_order(rep.flatten()), aut_order(rep))

    def label(self) -> str:
        return self.representative.short_label()


@dataclass(frozen=True)
class InfragraphDecomposition:
    """A labelled Veblen infragraph of a host, split into connected classes."""
    parts: Tuple[Tuple[VeblenClass, int], ...]
    total: int
    support: Tuple[Tuple[Edge, int], ...] = field(default=())

    @property
    def component_count(self) -> int:
        return sum(copies for _, copies in self.parts)


@dataclass
class Placement:
    veblen_class: VeblenClass
    count: int = 0


# -- free enumeration ----------------------------------------------------------

def _feasible(h: MultiHypergraph, remaining: int, d: int) -> bool:
    if h.n > d:
        return False
    deficits = [(-deg) % h.k for deg in h.degrees().values()]
    return max(deficits, default=0) <= remaining and sum(deficits) <= h.k * remaining


def _extensions(h: MultiHypergraph, d: int) -> Iterator[MultiHypergraph]:
    """Add one edge meeting the current vertex set; fresh vertices take the next labels."""
    k, n = h.k, h.n
    for shared in range(1, min(k, n) + 1):
        fresh = k - shared
        if n + fresh > d:
            continue
        new_vertices = tuple(range(n + 1, n + fresh + 1))
        for old in combinations(range(1, n + 1), shared):
            yield h.add_edge(old + new_vertices)


def connected_veblen_classes(k: int, d: int, budget: Optional[Budget] = None,
                             max_classes: Optional[int] = None) -> List[VeblenClass]:
    """Connected Veblen k-graphs with d edges, one per isomorphism class, sorted by key."""
    if k < 2:
        raise InvalidHypergraphError(f"uniformity must be at least 2, got k={k}")
    if d < 0:
        raise ValueError(f"edge count must be non-negative, got d={d}")
    cached = _connected_cache.get((k, d))
    if cached is not None:
        return cached
    budget = budget or Budget(label=f"connected Veblen enumeration k={k} d={d}")
    limit = max_classes or MAX_CLASSES
    if d == 0:
        return []
    seed = MultiHypergraph.from_edges(k, [tuple(range(1, k + 1))])
    level: Dict[CanonicalKey, MultiHypergraph] = {}
    if _feasible(seed, d - 1, d):
        level[canonical_key(seed)] = seed
    for size in range(1, d):
        remaining = d - size - 1
        grown: Dict[CanonicalKey, MultiHypergraph] = {}
        for h in level.values():
            for candidate in _extensions(h, d):
                budget.check()
                if not _feasible(candidate, remaining, d):
                    continue
                key = canonical_key(candidate)
                if key not in grown:
                    grown[key] = candidate
                    if len(grown) > limit:
                        raise CapExceededError("Veblen class cap", limit, len(grown))
        level = grown
        logger.info(f"k={k} d={d}: {len(level)} partial classes with {size + 1} edges")
    classes = sorted((VeblenClass(canonical_relabelling(h), key) for key, h in level.items() if h.is_veblen()),
                     key=lambda c: c.key)
    _connected_cache[(k, d)] = classes
    return classes


def veblen_classes(k: int, d: int, connected: bool = False, budget: Optional[Budget] = None,
                   max_classes: Optional[int] = None) -> List[VeblenClass]:
    """
    All Veblen k-graphs with d edges up to isomorphism. The disconnected ones
    are multisets of connected classes, joined by disjoint union.
    """
    if connected:
        return connected_veblen_classes(k, d, budget, max_classes)
    if d == 0:
        empty = MultiHypergraph.empty(k)
        return [VeblenClass(empty, canonical_key(empty))]
    pool: List[VeblenClass] = []
    for size in range(1, d + 1):
        pool.extend(connected_veblen_classes(k, size, budget, max_classes))

    def choose(start: int, remaining: int) -> Iterator[List[VeblenClass]]:
        if remaining == 0:
            yield []
            return
        for index in range(start, len(pool)):
            piece = pool[index]
            if piece.edge_count <= remaining:
                for rest in choose(index, remaining - piece.edge_count):
                    yield [piece] + rest

    classes = []
    for pieces in choose(0, d):
        union = MultiHypergraph.empty(k)
        for piece in pieces:
            union = union.disjoint_union(piece.representative)
        classes.append(VeblenClass(union, canonical_key(union)))
    return sorted(classes, key=lambda c: c.key)


def all_veblen_class_counts(k: int, d: int, budget: Optional[Budget] = None,
                           max_classes: Optional[int] = None) -> int:
    """Euler transform of the connected counts: b_m = (1/m) sum_j (sum_{i | j} i c_i) b_{m-j}."""
    connected = [0] + [len(connected_veblen_classes(k, size, budget, max_classes)) for size in range(1, d + 1)]
    weights = [0] * (d + 1)
    for j in range(1, d + 1):
        weights[j] = sum(i * connected[i] for i in range(1, j + 1) if j % i == 0)
    counts = [1] + [0] * d
    for m in range(1, d + 1):
        counts[m] = sum(weights[j] * counts[m - j] for j in range(1, m + 1)) // m
    return counts[d]


# -- infragraphs of a host -----------------------------------------------------

def _check_host(host: MultiHypergraph) -> None:
    if not host.is_simple():
        raise InvalidHypergraphError("host must be a simple k-graph")


def veblen_vectors(host: MultiHypergraph, d: int, budget: Optional[Budget] = None) -> Iterator[MultiHypergraph]:
    """
    Every multiplicity vector on the host's edges with total d whose degrees
    are divisible by k, yielded as a labelled infragraph of the host.
    """
    _check_host(host)
    budget = budget or Budget(label="infragraph enumeration")
    edges = host.distinct_edges
    if d == 0:
        yield MultiHypergraph.empty(host.k, host.n)
        return
    if not edges:
        return
    last_edge: Dict[int, int] = {}
    for index, edge in enumerate(edges):
        for v in edge:
            last_edge[v] = index
    degree = {v: 0 for v in range(1, host.n + 1)}
    chosen = [0] * len(edges)

    def assign(index: int, remaining: int) -> Iterator[MultiHypergraph]:
        budget.check()
        edge = edges[index]
        options = [remaining] if index == len(edges) - 1 else range(remaining + 1)
        for mult in options:
            for v in edge:
                degree[v] += mult
            if all(degree[v] % host.k == 0 for v in edge if last_edge[v] == index):
                chosen[index] = mult
                if index == len(edges) - 1:
                    yield MultiHypergraph.from_multiplicities(host.k, host.n, dict(zip(edges, chosen)))
                else:
                    yield from assign(index + 1, remaining - mult)
            for v in edge:
                degree[v] -= mult
        chosen[index] = 0

    yield from assign(0, d)


def _decompose(h: MultiHypergraph) -> Tuple[Tuple[VeblenClass, int], ...]:
    counts: Dict[CanonicalKey, Placement] = {}
    for component in h.connected_components():
        core = component.compact()
        key = canonical_key(core)
        if key not in counts:
            counts[key] = Placement(VeblenClass(canonical_relabelling(core), key))
        counts[key].count += 1
    return tuple((counts[key].veblen_class, counts[key].count) for key in sorted(counts))


def veblen_infragraphs(host: MultiHypergraph, d: int, budget: Optional[Budget] = None) -> List[InfragraphDecomposition]:
    return [
        InfragraphDecomposition(parts=_decompose(h), total=d, support=h.edges)
        for h in veblen_vectors(host, d, budget)
    ]


def connected_placement_counts(host: MultiHypergraph, d: int,
                               budget: Optional[Budget] = None) -> Dict[CanonicalKey, Placement]:
    """
    For every connected Veblen class with d edges, how many labelled
    infragraphs of the host realise it (equal to its occurrence count).
    """
    placements: Dict[CanonicalKey, Placement] = {}
    for h in veblen_vectors(host, d, budget):
        if not h.is_connected():
            continue
        core = h.compact()
        key = canonical_key(core)
        if key not in placements:
            placements[key] = Placement(VeblenClass(canonical_relabelling(core), key))
        placements[key].count += 1
    logger.debug(f"d={d}: {len(placements)} connected classes placed in {host.short_label()}")
    return dict(sorted(placements.items()))

"""
Canonical labelling and automorphism counting for small multi-hypergraphs.

Individualization-refinement: vertices are coloured by an isomorphism-invariant
refinement over incident edges (multiplicity plus the colours of the other
edge members); while some colour class has more than one vertex, each member of
the first such class is individualized in turn. Every leaf of that search tree
is a discrete labelling; the canonical certificate is the smallest relabelled
edge list over all leaves, and the leaves that reproduce it are in bijection
with the automorphism group.

Components are labelled separately, so disjoint unions of symmetric pieces never
blow up the leaf count.
"""
import hashlib
import logging
import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

from app.config import MAX_CANONICAL_VERTICES
from app.exceptions import CapExceededError
from app.hypergraph import MultiHypergraph

logger = logging.getLogger(__name__)

Certificate = Tuple[int, Tuple[Tuple[Tuple[int, ...], int], ...]]


@dataclass(frozen=True, order=True)
class CanonicalKey:
    """
    Total-order certificate: (k, isolated vertex count, sorted component forms),
    each component form being (vertex count, relabelled edge list).
    """
    certificate: Tuple

    def digest(self) -> str:
        return hashlib.sha1(repr(self.certificate).encode()).hexdigest()[:16]

    def __str__(self) -> str:
        return self.digest()


def _check_cap(h: MultiHypergraph) -> None:
    if h.n > MAX_CANONICAL_VERTICES:
        raise CapExceededError("canonical form vertex cap", MAX_CANONICAL_VERTICES, h.n)


def canonical_key(h: MultiHypergraph) -> CanonicalKey:
    _check_cap(h)
    forms = sorted(_component_form(c.compact())[0] for c in h.connected_components())
    isolated = h.n - len(h.used_vertices())
    return CanonicalKey((h.k, isolated, tuple(forms)))


def aut_order(h: MultiHypergraph) -> int:
    """Order of the vertex permutation group preserving the multiplicity function."""
    _check_cap(h)
    order = 1
    repeats: Counter = Counter()
    for component in h.connected_components():
        form, count = _component_form(component.compact())
        order *= count
        repeats[form] += 1
    for copies in repeats.values():
        order *= math.factorial(copies)
    return order * math.factorial(h.n - len(h.used_vertices()))


def canonical_relabelling(h: MultiHypergraph) -> MultiHypergraph:
    """A fixed representative of the isomorphism class of `h`, on labels 1..m."""
    _check_cap(h)
    pieces = sorted((_component_form(c.compact())[0] for c in h.connected_components()))
    result = MultiHypergraph.empty(h.k)
    for size, edges in pieces:
        result = result.disjoint_union(MultiHypergraph(k=h.k, n=size, edges=edges))
    isolated = h.n - len(h.used_vertices())
    return MultiHypergraph(k=h.k, n=result.n + isolated, edges=result.edges)


@lru_cache(maxsize=1 << 16)
def _component_form(h: MultiHypergraph) -> Tuple[Certificate, int]:
    """
    Canonical form of a connected hypergraph on 1..m with no isolated vertex,
    together with the number of leaves that reach it (= |Aut|).
    """
    vertices = list(range(1, h.n + 1))
    incident: Dict[int, List[Tuple[int, Tuple[int, ...]]]] = {v: [] for v in vertices}
    for edge, mult in h.edges:
        for v in edge:
            incident[v].append((mult, tuple(u for u in edge if u != v)))

    best = None
    hits = 0

    def refine(colors: Dict[int, int]) -> Dict[int, int]:
        classes = len(set(colors.values()))
        while True:
            signature = {
                v: (colors[v], tuple(sorted((m, tuple(sorted(colors[u] for u in others)))
                                            for m, others in incident[v])))
                for v in vertices
            }
            rank = {s: i for i, s in enumerate(sorted(set(signature.values())))}
            colors = {v: rank[signature[v]] for v in vertices}
            if len(rank) == classes:
                return colors
            classes = len(rank)

    def visit(colors: Dict[int, int]) -> None:
        nonlocal best, hits
        colors = refine(colors)
        cells: Dict[int, List[int]] = {}
        for v in vertices:
            cells.setdefault(colors[v], []).append(v)
        if len(cells) == len(vertices):
            relabelled = tuple(sorted(
                (tuple(sorted(colors[v] + 1 for v in edge)), mult) for edge, mult in h.edges
            ))
            if best is None or relabelled < best:
                best, hits = relabelled, 1
            elif relabelled == best:
                hits += 1
            return
        target = min(c for c, members in cells.items() if len(members) > 1)
        for v in cells[target]:
            split = {u: 2 * c + 1 for u, c in colors.items()}
            split[v] = 2 * colors[v]
            visit(split)

    visit({v: 0 for v in vertices})
    logger.debug(f"canonical form of {h.short_label()}: {hits} automorphisms")
    return (h.n, best), hits


def are_isomorphic(a: MultiHypergraph, b: MultiHypergraph) -> bool:
    return a.k == b.k and a.n == b.n and canonical_key(a) == canonical_key(b)

"""
Directed multigraph arithmetic: out-degree Laplacians, arborescence counts
(Matrix-Tree), Eulerian tests and Euler circuit counts (BEST theorem plus an
exhaustive oracle). Everything is exact integer arithmetic.
"""
import logging
import math
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

import networkx as nx

from app.config import MAX_BRUTE_ARCS
from app.exceptions import CapExceededError, InvalidHypergraphError, NotEulerianError, NotVeblenError
from app.hypergraph import MultiHypergraph

logger = logging.getLogger(__name__)

Arc = Tuple[int, int]


@dataclass(frozen=True)
class MultiDigraph:
    n: int
    arcs: Tuple[Tuple[Arc, int], ...]

    def __post_init__(self):
        for (u, v), mult in self.arcs:
            if u == v:
                raise InvalidHypergraphError(f"self-loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise InvalidHypergraphError(f"arc {u}->{v} outside 1..{self.n}")
            if mult < 1:
                raise InvalidHypergraphError(f"arc {u}->{v} has multiplicity {mult}")

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable) -> "MultiDigraph":
        """Accepts `(u, v)` pairs (multiplicity 1 each) or `((u, v), m)` items."""
        counts: Counter = Counter()
        for item in arcs:
            if isinstance(item[0], tuple):
                (u, v), mult = item
            else:
                (u, v), mult = item, 1
            counts[(u, v)] += mult
        return cls(n=n, arcs=tuple(sorted((a, m) for a, m in counts.items() if m > 0)))

    @property
    def multiplicities(self) -> Dict[Arc, int]:
        return dict(self.arcs)

    @property
    def arc_count(self) -> int:
        return sum(m for _, m in self.arcs)

    def out_degree(self, v: int) -> int:
        return sum(m for (u, _), m in self.arcs if u == v)

    def in_degree(self, v: int) -> int:
        return sum(m for (_, w), m in self.arcs if w == v)

    def support(self) -> List[int]:
        return sorted({x for arc, _ in self.arcs for x in arc})


def laplacian(d: MultiDigraph) -> List[List[int]]:
    """Out-degree Laplacian, rows and columns indexed by vertices 1..n."""
    matrix = [[0] * d.n for _ in range(d.n)]
    for (u, v), mult in d.arcs:
        matrix[u - 1][u - 1] += mult
        matrix[u - 1][v - 1] -= mult
    return matrix


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination; every intermediate division is exact."""
    size = len(matrix)
    if size == 0:
        return 1
    mat = [list(row) for row in matrix]
    sign = 1
    prev_pivot = 1
    for k in range(size - 1):
        pivot_row = k
        while mat[pivot_row][k] == 0:
            pivot_row += 1
            if pivot_row == size:
                return 0
        if pivot_row != k:
            mat[pivot_row], mat[k] = mat[k], mat[pivot_row]
            sign = -sign
        pivot = mat[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                mat[i][j] = (pivot * mat[i][j] - mat[i][k] * mat[k][j]) // prev_pivot
            mat[i][k] = 0
        prev_pivot = pivot
    return sign * mat[size - 1][size - 1]


def arborescence_count(d: MultiDigraph, root: int) -> int:
    """
    Spanning arborescences in which every non-root vertex has one out-arc and
    all paths lead to `root`, arcs weighted by multiplicity.
    """
    if not 1 <= root <= d.n:
        raise InvalidHypergraphError(f"root {root} outside 1..{d.n}")
    full = laplacian(d)
    keep = [i for i in range(d.n) if i != root - 1]
    minor = [[full[i][j] for j in keep] for i in keep]
    return bareiss_determinant(minor)


def _as_networkx(d: MultiDigraph) -> nx.MultiDiGraph:
    graph = nx.MultiDiGraph()
    for (u, v), mult in d.arcs:
        for _ in range(mult):
            graph.add_edge(u, v)
    return graph


def is_balanced(d: MultiDigraph) -> bool:
    balance: Counter = Counter()
    for (u, v), mult in d.arcs:
        balance[u] += mult
        balance[v] -= mult
    return all(b == 0 for b in balance.values())


def is_eulerian(d: MultiDigraph) -> bool:
    """Balanced everywhere and all arcs in one component; a digraph with no arcs is not."""
    if not d.arcs:
        return False
    return is_balanced(d) and nx.is_weakly_connected(_as_networkx(d))


def _compact(d: MultiDigraph) -> MultiDigraph:
    support = d.support()
    index = {v: i for i, v in enumerate(support, start=1)}
    return MultiDigraph(n=len(support), arcs=tuple(sorted(((index[u], index[v]), m) for (u, v), m in d.arcs)))


def euler_circuit_count_best(d: MultiDigraph) -> int:
    """tau(D, r) * prod (deg-(v) - 1)!, parallel arcs distinguishable."""
    if not is_eulerian(d):
        raise NotEulerianError("BEST theorem needs a connected balanced digraph")
    core = _compact(d)
    tau = arborescence_count(core, 1)
    result = tau
    for v in range(1, core.n + 1):
        result *= math.factorial(core.in_degree(v) - 1)
    return result


def euler_circuit_count_brute(d: MultiDigraph) -> int:
    """
    Exhaustive count of Euler circuits up to rotation: every circuit is read
    starting from arc number 0, parallel arcs distinguishable.
    """
    if d.arc_count > MAX_BRUTE_ARCS:
        raise CapExceededError("brute-force Euler circuit arc cap", MAX_BRUTE_ARCS, d.arc_count)
    if not is_eulerian(d):
        return 0
    arc_list = [arc for arc, mult in d.arcs for _ in range(mult)]
    outgoing: Dict[int, List[int]] = {}
    for index, (u, _) in enumerate(arc_list):
        outgoing.setdefault(u, []).append(index)
    used = [False] * len(arc_list)
    used[0] = True
    start = arc_list[0][0]

    def extend(at: int, remaining: int) -> int:
        if remaining == 0:
            return 1 if at == start else 0
        total = 0
        for index in outgoing.get(at, ()):
            if not used[index]:
                used[index] = True
                total += extend(arc_list[index][1], remaining - 1)
                used[index] = False
        return total

    return extend(arc_list[0][1], len(arc_list) - 1)


def _check_veblen_graph(g: MultiHypergraph) -> None:
    if g.k != 2:
        raise InvalidHypergraphError(f"expected a 2-graph, got k={g.k}")
    if not g.is_veblen():
        raise NotVeblenError("every vertex must have even degree")
    if not g.is_connected():
        raise NotVeblenError("graph must be connected")


def euler_orientations(g: MultiHypergraph) -> List[Tuple[MultiDigraph, int]]:
    """
    Euler orientations of a connected Veblen graph, as arc-multiplicity
    digraphs, each paired with the number of ways to orient the distinguishable
    parallel edges into it (prod of binomials).
    """
    _check_veblen_graph(g)
    edges = g.edges
    last_edge: Dict[int, int] = {}
    for index, (edge, _) in enumerate(edges):
        for v in edge:
            last_edge[v] = index
    balance = {v: 0 for v in g.used_vertices()}
    found: List[Tuple[MultiDigraph, int]] = []
    chosen: List[int] = []

    def assign(index: int) -> None:
        if index == len(edges):
            arcs = []
            ways = 1
            for ((u, v), m), forward in zip(edges, chosen):
                arcs.append(((u, v), forward))
                arcs.append(((v, u), m - forward))
                ways *= math.comb(m, forward)
            found.append((MultiDigraph.from_arcs(g.n, arcs), ways))
            return
        (u, v), m = edges[index]
        for forward in range(m + 1):
            balance[u] += 2 * forward - m
            balance[v] -= 2 * forward - m
            if all(balance[w] == 0 for w in (u, v) if last_edge[w] == index):
                chosen.append(forward)
                assign(index + 1)
                chosen.pop()
            balance[u] -= 2 * forward - m
            balance[v] += 2 * forward - m

    assign(0)
    return found


def euler_circuit_count_undirected(g: MultiHypergraph) -> int:
    """|E(G)|: Euler circuits of G with distinguishable edges, summed over orientations."""
    total = 0
    for digraph, ways in euler_orientations(g):
        total += ways * euler_circuit_count_best(digraph)
    logger.debug(f"{g.short_label()} has {total} Euler circuits")
    return total

"""
Codegree coefficients of the normalized adjacency characteristic polynomial.

For a simple k-graph on n vertices the generating series sum_d c_d x^d is
exp(sum_d g_d x^d) with

    g_d = -(k-1)^n * sum over connected Veblen infragraphs H with d edges of C_H

where the sum runs over labelled infragraphs, i.e. every class counted with
its occurrence count. Threshold values use the same series with n replaced by v.
"""
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Tuple

from app.associated import associated_coefficient
from app.budget import Budget
from app.canonical import aut_order, canonical_key
from app.exceptions import CapExceededError, InvalidHypergraphError, NotVeblenError
from app.hypergraph import MultiHypergraph
from app.simplex import simplex, simplex_Ck
from app.veblen import VeblenClass, connected_placement_counts

logger = logging.getLogger(__name__)


@dataclass
class CoefficientVector:
    k: int
    n: int
    edges: Tuple[Tuple[int, ...], ...]
    values: Dict[int, Fraction]
    d_max: int
    valid_through: int
    stopped_by: Optional[str] = None

    @property
    def normalized_degree(self) -> int:
        """N = n (k-1)^(n-1); c_d multiplies lambda^(N-d)."""
        return self.n * (self.k - 1) ** (self.n - 1)

    @property
    def complete(self) -> bool:
        return self.valid_through >= self.d_max

    def __getitem__(self, d: int) -> Fraction:
        if d > self.valid_through:
            raise KeyError(f"c_{d} is beyond the computed range 0..{self.valid_through}")
        return self.values[d]


@dataclass
class ThresholdReport:
    v: int
    values: Dict[int, Fraction]
    d_max: int
    largest_nonzero: Optional[int] = None
    valid_through: int = 0
    notes: List[str] = field(default_factory=list)


def _check_simple_host(host: MultiHypergraph) -> None:
    if not host.is_simple():
        raise InvalidHypergraphError("host must be a simple k-graph")


# -- occurrence counts ---------------------------------------------------------

def simple_subgraph_count(host: MultiHypergraph, pattern: MultiHypergraph) -> int:
    """Number of edge subsets of the host isomorphic to the (simple) pattern."""
    _check_simple_host(host)
    if not pattern.is_simple():
        raise InvalidHypergraphError("pattern must be simple")
    if pattern.k != host.k:
        return 0
    size = pattern.edge_count
    if size == 0:
        return 1
    target = canonical_key(pattern.compact())
    count = 0
    for subset in combinations(host.distinct_edges, size):
        candidate = MultiHypergraph.from_edges(host.k, subset, n=host.n).compact()
        if canonical_key(candidate) == target:
            count += 1
    return count


def _class_occurrence(host: MultiHypergraph, component: MultiHypergraph) -> Fraction:
    flat = component.flatten()
    return Fraction(aut_order(flat), aut_order(component)) * simple_subgraph_count(host, flat)


def occurrence_count(host: MultiHypergraph, h: MultiHypergraph) -> Fraction:
    """
    #H in host: components placed independently, each class contributing
    occ^m / m! for m copies; placements may coincide.
    """
    _check_simple_host(host)
    if not h.is_veblen():
        raise NotVeblenError(f"{h.short_label()} is not Veblen")
    groups: Dict = {}
    for component in h.connected_components():
        core = component.compact()
        key = canonical_key(core)
        if key not in groups:
            groups[key] = [core, 0]
        groups[key][1] += 1
    result = Fraction(1)
    for core, copies in groups.values():
        result *= _class_occurrence(host, core) ** copies / math.factorial(copies)
    return result


# -- assembly ------------------------------------------------------------------

def _connected_sum(placements: Dict, budget: Budget) -> Fraction:
    total = Fraction(0)
    for placement in placements.values():
        budget.check()
        total += associated_coefficient(placement.veblen_class.representative) * placement.count
    return total


def _convolve(g: Dict[int, Fraction], d_max: int) -> Dict[int, Fraction]:
    """d c_d = sum_{j=1..d} j g_j c_{d-j}, c_0 = 1."""
    c = {0: Fraction(1)}
    for d in range(1, d_max + 1):
        c[d] = sum((j * g[j] * c[d - j] for j in range(1, d + 1)), Fraction(0)) / d
    return c


def _weighted_series(host: MultiHypergraph, weight: int, d_max: int,
                     budget: Budget) -> Tuple[Dict[int, Fraction], int, Optional[str]]:
    """Connected contributions g_d = -weight * sum C_H over placements, as far as the budget allows."""
    g: Dict[int, Fraction] = {}
    valid_through = 0
    stopped_by = None
    for d in range(1, d_max + 1):
        try:
            g[d] = -weight * _connected_sum(connected_placement_counts(host, d, budget), budget)
        except CapExceededError as exc:
            logger.warning(f"stopped at d={d}: {exc}")
            stopped_by = str(exc)
            break
        valid_through = d
    return g, valid_through, stopped_by


def codegree_coefficients(host: MultiHypergraph, d_max: int,
                          budget: Optional[Budget] = None) -> CoefficientVector:
    """
    c_0..c_{d_max}. If a cap or the time budget fires, the vector is returned
    with `valid_through` set to the last codegree fully computed.
    """
    _check_simple_host(host)
    if d_max < 0:
        raise ValueError(f"d_max must be non-negative, got {d_max}")
    budget = budget or Budget(label="codegree coefficient budget")
    g, valid_through, stopped_by = _weighted_series(host, (host.k - 1) ** host.n, d_max, budget)
    values = _convolve(g, valid_through)
    logger.info(f"computed c_0..c_{valid_through} for {host.short_label()} in {budget.elapsed():.2f}s")
    return CoefficientVector(
        k=host.k, n=host.n, edges=tuple(host.distinct_edges), values=values,
        d_max=d_max, valid_through=valid_through, stopped_by=stopped_by,
    )


def connected_contributions(host: MultiHypergraph, d: int,
                            budget: Optional[Budget] = None) -> List[Tuple[VeblenClass, int, Fraction]]:
    """(class, occurrence count, C_H) for every connected class with d edges placed in the host."""
    budget = budget or Budget()
    return [
        (p.veblen_class, p.count, associated_coefficient(p.veblen_class.representative))
        for p in connected_placement_counts(host, d, budget).values()
    ]


def assemble_direct(host: MultiHypergraph, d: int, budget: Optional[Budget] = None) -> Fraction:
    """
    c_d as the literal sum over (possibly disconnected) Veblen infragraph
    classes H with d edges of (-(k-1)^n)^c(H) C_H (#H in host).
    """
    _check_simple_host(host)
    budget = budget or Budget(label="direct assembly budget")
    sign_weight = -((host.k - 1) ** host.n)
    pool: List[Tuple[int, Fraction]] = []
    for size in range(1, d + 1):
        for p in connected_placement_counts(host, size, budget).values():
            value = associated_coefficient(p.veblen_class.representative)
            pool.append((size, sign_weight * value * p.count))

    def choose(start: int, remaining: int) -> Iterator[List[int]]:
        if remaining == 0:
            yield []
            return
        for index in range(start, len(pool)):
            if pool[index][0] <= remaining:
                for rest in choose(index, remaining - pool[index][0]):
                    yield [index] + rest

    total = Fraction(0)
    for picked in choose(0, d):
        budget.check()
        term = Fraction(1)
        for index in picked:
            term *= pool[index][1]
        for index in set(picked):
            term /= math.factorial(picked.count(index))
        total += term
    return total


def harary_sachs_2graph(host: MultiHypergraph, d: int) -> int:
    """Sum over elementary subgraphs on d vertices of (-1)^c 2^z."""
    if host.k != 2:
        raise InvalidHypergraphError(f"expected a graph, got k={host.k}")
    _check_simple_host(host)
    neighbours = {v: set() for v in range(1, host.n + 1)}
    for u, v in host.distinct_edges:
        neighbours[u].add(v)
        neighbours[v].add(u)

    def cycles_through(v: int, allowed: frozenset) -> Iterator[frozenset]:
        """Vertex sets of cycles of length >= 3 through v inside `allowed`, each undirected cycle once."""
        def walk(path: List[int]) -> Iterator[frozenset]:
            tail = path[-1]
            for w in neighbours[tail]:
                if w == v and len(path) >= 3 and path[1] < path[-1]:
                    yield frozenset(path)
                elif w in allowed and w not in path:
                    yield from walk(path + [w])
        return walk([v])

    def cover(allowed: frozenset, needed: int) -> int:
        if needed == 0:
            return 1
        if len(allowed) < needed:
            return 0
        v = min(allowed)
        rest = allowed - {v}
        total = cover(rest, needed)
        for u in neighbours[v] & rest:
            if needed >= 2:
                total -= cover(rest - {u}, needed - 2)
        for cycle in cycles_through(v, rest):
            if len(cycle) <= needed:
                total -= 2 * cover(allowed - cycle, needed - len(cycle))
        return total

    if d < 0:
        return 0
    return cover(frozenset(range(1, host.n + 1)), d)


def codegree_k_closed_forms(host: MultiHypergraph) -> Tuple[int, int]:
    """
    (c_k, c_{k+1}) in closed form: -k^(k-2) (k-1)^(n-k) |E| and
    -C_k (k-1)^(n-k) times the number of simplices K_{k+1}^{(k)} in the host.
    """
    _check_simple_host(host)
    k, n = host.k, host.n
    scale = (k - 1) ** (n - k) if n >= k else 0
    c_k = -(k ** (k - 2)) * scale * host.edge_count
    c_k1 = -simplex_Ck(k) * scale * simple_subgraph_count(host, simplex(k)) if n > k else 0
    return c_k, c_k1


# -- thresholds ----------------------------------------------------------------

def threshold_f(host: MultiHypergraph, v: int, d: int, budget: Optional[Budget] = None) -> Fraction:
    """The codegree series of the host with (k-1)^n replaced by (k-1)^v, at d."""
    _check_simple_host(host)
    if v < 0:
        raise ValueError(f"v must be non-negative, got {v}")
    budget = budget or Budget(label="threshold budget")
    g, valid_through, stopped_by = _weighted_series(host, (host.k - 1) ** v, d, budget)
    if stopped_by is not None:
        raise CapExceededError(f"threshold table at d={valid_through + 1}", stopped_by)
    return _convolve(g, d)[d]


def threshold_search(host: MultiHypergraph, v: int, d_max: int, budget: Optional[Budget] = None) -> ThresholdReport:
    """Largest d <= d_max with a non-zero v-weighted value, plus the whole table."""
    _check_simple_host(host)
    if v < 0:
        raise ValueError(f"v must be non-negative, got {v}")
    budget = budget or Budget(label="threshold budget")
    g, valid_through, stopped_by = _weighted_series(host, (host.k - 1) ** v, d_max, budget)
    values = _convolve(g, valid_through)
    nonzero = [d for d, value in values.items() if value != 0]
    report = ThresholdReport(v=v, values=values, d_max=d_max,
                             largest_nonzero=max(nonzero) if nonzero else None,
                             valid_through=valid_through)
    if stopped_by is not None:
        report.notes.append(f"search stopped at d={valid_through + 1}: {stopped_by}")
    if report.largest_nonzero == d_max:
        report.notes.append("value at the search bound is non-zero; the threshold may be larger")
    return report

"""
The simplex constant C_k = (k-1)^k * C(K_{k+1}^{(k)}).

Euler rootings of the simplex are the derangements sigma of [k+1] (vertex i
roots the edge that misses sigma(i)), and the arborescence count of D_sigma
depends only on the cycle type:

    tau_sigma = prod_l (k^l + (-1)^(l+1)) / (k+1)^2

so C_k = sum_p |D(p)| prod_i (k^p_i + (-1)^(p_i+1)) / ((k-1)(k+1)^2),
summed over partitions p of k+1 into parts >= 2.
"""
import logging
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from itertools import permutations
from typing import Iterator, List, Sequence, Tuple

from app.config import MAX_DIRECT_SIMPLEX_K
from app.digraph import MultiDigraph
from app.exceptions import CapExceededError, InconsistencyError, InvalidHypergraphError
from app.hypergraph import MultiHypergraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntegerPartition:
    parts: Tuple[int, ...]

    @property
    def n(self) -> int:
        return sum(self.parts)

    def multiplicity(self, part: int) -> int:
        """V_p(i): how many parts equal `part`."""
        return self.parts.count(part)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


@dataclass(frozen=True)
class CycleType:
    lengths: Tuple[int, ...]

    @property
    def is_derangement(self) -> bool:
        return all(length >= 2 for length in self.lengths)

    def as_partition(self) -> IntegerPartition:
        return IntegerPartition(self.lengths)


def _check_k(k: int) -> None:
    if k < 2:
        raise InvalidHypergraphError(f"simplex needs k >= 2, got {k}")


def partitions_min2(n: int) -> List[IntegerPartition]:
    """Partitions of n into parts >= 2, reverse-lexicographic."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")

    def build(remaining: int, largest: int) -> Iterator[Tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, largest), 1, -1):
            for rest in build(remaining - part, part):
                yield (part,) + rest

    return [IntegerPartition(parts) for parts in build(n, n)]


def derangement_class_size(p: IntegerPartition) -> int:
    """Number of permutations of [n] with cycle type p."""
    denominator = 1
    for part in p.parts:
        denominator *= part
    for copies in Counter(p.parts).values():
        denominator *= math.factorial(copies)
    return math.factorial(p.n) // denominator


@cache
def derangement_count(n: int) -> int:
    """D_n = (n-1)(D_{n-1} + D_{n-2})."""
    if n == 0:
        return 1
    if n == 1:
        return 0
    return (n - 1) * (derangement_count(n - 1) + derangement_count(n - 2))


def cycle_type(perm: Sequence[int]) -> CycleType:
    """Cycle type of a permutation of 0..n-1 in one-line notation."""
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length, at = 0, start
        while not seen[at]:
            seen[at] = True
            at = perm[at]
            length += 1
        lengths.append(length)
    return CycleType(tuple(sorted(lengths, reverse=True)))


def enumerate_derangements(n: int) -> Iterator[Tuple[Tuple[int, ...], CycleType]]:
    """Every derangement of 0..n-1, lexicographic, paired with its cycle type."""
    for perm in permutations(range(n)):
        if all(perm[i] != i for i in range(n)):
            yield perm, cycle_type(perm)


def simplex(k: int) -> MultiHypergraph:
    """K_{k+1}^{(k)}: all k-subsets of [k+1]."""
    _check_k(k)
    vertices = range(1, k + 2)
    return MultiHypergraph.from_edges(k, [tuple(v for v in vertices if v != j) for j in vertices], n=k + 1)


def simplex_rooting_digraph(k: int, sigma: Sequence[int]) -> MultiDigraph:
    """D_sigma: vertex i+1 roots the edge [k+1] minus {sigma[i]+1}."""
    _check_k(k)
    if sorted(sigma) != list(range(k + 1)) or any(sigma[i] == i for i in range(k + 1)):
        raise InvalidHypergraphError(f"{tuple(sigma)} is not a derangement of 0..{k}")
    arcs = []
    for i, missing in enumerate(sigma):
        arcs.extend((i + 1, w) for w in range(1, k + 2) if w not in (i + 1, missing + 1))
    return MultiDigraph.from_arcs(k + 1, arcs)


def cycle_factor(k: int, length: int) -> int:
    return k ** length + (-1) ** (length + 1)


def simplex_arborescence_count(k: int, ctype: CycleType) -> int:
    """tau(D_sigma) from the cycle type alone."""
    product = 1
    for length in ctype.lengths:
        product *= cycle_factor(k, length)
    quotient, remainder = divmod(product, (k + 1) ** 2)
    if remainder:
        raise InconsistencyError(f"cycle product {product} not divisible by {(k + 1) ** 2}")
    return quotient


def _divide_exactly(total: int, divisor: int, what: str) -> int:
    quotient, remainder = divmod(total, divisor)
    if remainder:
        raise InconsistencyError(f"{what}: {total} is not divisible by {divisor}")
    return quotient


def simplex_partition_sum(k: int) -> int:
    """sum_p |D(p)| prod (k^p_i + (-1)^(p_i+1)) over partitions of k+1 into parts >= 2."""
    total = 0
    for p in partitions_min2(k + 1):
        term = derangement_class_size(p)
        for part in p.parts:
            term *= cycle_factor(k, part)
        total += term
    return total


def _cycle_index_sum(k: int) -> int:
    """
    The same sum through the exponential formula: with a_m = m! [x^m] exp(sum_l f(l) x^l / l),
    a_m = sum_{l=2..m} (m-1)!/(m-l)! f(l) a_{m-l}. Quadratic in k instead of
    one term per partition.
    """
    size = k + 1
    a = [1] + [0] * size
    for m in range(1, size + 1):
        falling = 1
        total = 0
        for length in range(1, m + 1):
            if length >= 2:
                total += falling * cycle_factor(k, length) * a[m - length]
            falling *= m - length
        a[m] = total
    return a[size]


def simplex_Ck(k: int, method: str = "recurrence") -> int:
    """
    Exact C_k. `method="partitions"` sums over partitions of k+1 explicitly;
    the default evaluates the identical sum through the cycle-index recurrence,
    which stays fast for k in the hundreds.
    """
    _check_k(k)
    if method == "partitions":
        total = simplex_partition_sum(k)
    elif method == "recurrence":
        total = _cycle_index_sum(k)
    else:
        raise ValueError(f"unknown method {method!r}")
    value = _divide_exactly(total, (k - 1) * (k + 1) ** 2, f"C_{k}")
    logger.debug(f"C_{k} has {len(str(value))} digits")
    return value


def simplex_Ck_direct(k: int) -> int:
    """(k-1)^k * C_H from an explicit walk over all derangements of [k+1]."""
    _check_k(k)
    if k > MAX_DIRECT_SIMPLEX_K:
        raise CapExceededError("direct simplex derangement cap", MAX_DIRECT_SIMPLEX_K, k)
    total = 0
    for _, ctype in enumerate_derangements(k + 1):
        product = 1
        for length in ctype.lengths:
            product *= cycle_factor(k, length)
        total += product
    c_h = Fraction(total, (k - 1) ** (k + 1) * (k + 1) ** 2)
    value = c_h * (k - 1) ** k
    if value.denominator != 1:
        raise InconsistencyError(f"direct C_{k} = {value} is not an integer")
    return value.numerator


def asymptotic_ratio(k: int) -> Fraction:
    """C_k / ((k+1)! k^(k+1)), exact; reported, never asserted."""
    return Fraction(simplex_Ck(k), math.factorial(k + 1) * k ** (k + 1))

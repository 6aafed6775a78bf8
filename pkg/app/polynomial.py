"""Sparse big-integer univariate polynomials: the independent oracle for the Fano-family tables."""
import logging
from typing import Dict, Mapping, Optional, Tuple

from app.exceptions import HypergraphError

logger = logging.getLogger(__name__)


class SparsePolynomial:
    """exponent -> integer coefficient; zero coefficients are never stored."""

    def __init__(self, terms: Mapping[int, int]):
        cleaned = {}
        for exponent, coefficient in terms.items():
            if exponent < 0:
                raise ValueError(f"negative exponent {exponent}")
            if coefficient:
                cleaned[exponent] = coefficient
        self.terms: Dict[int, int] = cleaned

    @classmethod
    def promote(cls, item) -> "SparsePolynomial":
        if isinstance(item, SparsePolynomial):
            return item
        if isinstance(item, int):
            return cls({0: item})
        raise TypeError(f"cannot use {type(item).__name__} as a polynomial")

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "SparsePolynomial":
        return cls({exponent: coefficient})

    @classmethod
    def from_coefficients(cls, coefficients) -> "SparsePolynomial":
        """Highest degree first: [1, 0, -3, -2] is x^3 - 3x - 2."""
        top = len(coefficients) - 1
        return cls({top - i: c for i, c in enumerate(coefficients)})

    @property
    def degree(self) -> int:
        return max(self.terms, default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exponent: int) -> int:
        return self.terms.get(exponent, 0)

    def __eq__(self, other) -> bool:
        try:
            other = self.promote(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __add__(self, other) -> "SparsePolynomial":
        other = self.promote(other)
        terms = dict(self.terms)
        for exponent, coefficient in other.terms.items():
            terms[exponent] = terms.get(exponent, 0) + coefficient
        return SparsePolynomial(terms)

    __radd__ = __add__

    def __neg__(self) -> "SparsePolynomial":
        return SparsePolynomial({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "SparsePolynomial":
        return self + (-self.promote(other))

    def __rsub__(self, other) -> "SparsePolynomial":
        return self.promote(other) - self

    def __mul__(self, other) -> "SparsePolynomial":
        return poly_mul(self, self.promote(other))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "SparsePolynomial":
        return poly_pow(self, exponent)

    def __repr__(self) -> str:
        return f"SparsePolynomial({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exponent in sorted(self.terms, reverse=True):
            coefficient = self.terms[exponent]
            sign = "-" if coefficient < 0 else "+"
            magnitude = abs(coefficient)
            if exponent == 0:
                body = str(magnitude)
            else:
                power = "x" if exponent == 1 else f"x^{exponent}"
                body = power if magnitude == 1 else f"{magnitude}{power}"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text


X = SparsePolynomial.monomial(1)
ONE = SparsePolynomial.monomial(0)


def poly_mul(a: SparsePolynomial, b: SparsePolynomial, max_codegree: Optional[int] = None) -> SparsePolynomial:
    """
    Exact product. With `max_codegree`, terms more than that far below the
    leading exponent are dropped (integer polynomials have no zero divisors,
    so the leading exponent of the product is deg a + deg b).
    """
    if a.is_zero() or b.is_zero():
        return SparsePolynomial({})
    floor = None if max_codegree is None else a.degree + b.degree - max_codegree
    terms: Dict[int, int] = {}
    for e1, c1 in a.terms.items():
        for e2, c2 in b.terms.items():
            exponent = e1 + e2
            if floor is not None and exponent < floor:
                continue
            terms[exponent] = terms.get(exponent, 0) + c1 * c2
    return SparsePolynomial(terms)


def poly_pow(a: SparsePolynomial, exponent: int, max_codegree: Optional[int] = None) -> SparsePolynomial:
    """Repeated squaring."""
    if exponent < 0:
        raise ValueError(f"exponent must be non-negative, got {exponent}")
    result = ONE
    base = a
    while exponent:
        if exponent & 1:
            result = poly_mul(result, base, max_codegree)
        exponent >>= 1
        if exponent:
            base = poly_mul(base, base, max_codegree)
    return result


def _truncate(p: SparsePolynomial, max_codegree: Optional[int]) -> SparsePolynomial:
    if max_codegree is None:
        return p
    floor = p.degree - max_codegree
    return SparsePolynomial({e: c for e, c in p.terms.items() if e >= floor})


# x^133 (x^3-1)^27 (x^15-13x^12+65x^9-147x^6+157x^3-64)^12 (x^6-x^3+2)^6 (x^6-17x^3+64)^3
ROWLING_FACTORS: Tuple[Tuple[Tuple[int, ...], int], ...] = (
    ((1, 0), 133),
    ((1, 0, 0, -1), 27),
    ((1, 0, 0, -13, 0, 0, 65, 0, 0, -147, 0, 0, 157, 0, 0, -64), 12),
    ((1, 0, 0, -1, 0, 0, 2), 6),
    ((1, 0, 0, -17, 0, 0, 64), 3),
)


def expand_phi_rowling(max_codegree: Optional[int] = None) -> SparsePolynomial:
    """The factored characteristic polynomial of the Rowling hypergraph, multiplied out."""
    result = ONE
    for coefficients, power in ROWLING_FACTORS:
        factor = poly_pow(SparsePolynomial.from_coefficients(coefficients), power, max_codegree)
        result = poly_mul(result, factor, max_codegree)
    result = _truncate(result, max_codegree)
    logger.info(f"expanded Rowling polynomial: degree {result.degree}, {len(result.terms)} terms")
    return result


def codegree_coefficient_of(p: SparsePolynomial, d: int) -> int:
    """Coefficient of x^(deg p - d)."""
    if d < 0 or d > p.degree:
        raise HypergraphError(f"codegree {d} outside 0..{p.degree}")
    return p.coefficient(p.degree - d)

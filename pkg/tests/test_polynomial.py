import pytest

from app.exceptions import HypergraphError
from app.polynomial import ONE, X, SparsePolynomial, codegree_coefficient_of, expand_phi_rowling, poly_mul, poly_pow
from app.selftest import FANO_FAMILY_TABLE


def test_from_coefficients_and_str():
    p = SparsePolynomial.from_coefficients([1, 0, -3, -2])
    assert p.degree == 3
    assert str(p) == "x^3 - 3x - 2"
    assert str(SparsePolynomial({})) == "0"
    assert SparsePolynomial({}).degree == -1


def test_arithmetic():
    p = X + 1
    assert p * p == X * X + 2 * X + 1
    assert p ** 3 == poly_pow(p, 3)
    assert (p - p).is_zero()
    assert 1 - X == -(X - ONE)
    assert (X ** 2 - 1) == poly_mul(X - 1, X + 1)


def test_truncated_product_keeps_leading_terms():
    p = SparsePolynomial.from_coefficients([1, 2, 3, 4])
    q = SparsePolynomial.from_coefficients([1, -1, 5])
    full = p * q
    cut = poly_mul(p, q, max_codegree=2)
    assert cut.degree == full.degree
    for d in range(3):
        assert codegree_coefficient_of(cut, d) == codegree_coefficient_of(full, d)
    assert codegree_coefficient_of(cut, 4) == 0


def test_negative_exponents_rejected():
    with pytest.raises(ValueError):
        SparsePolynomial({-1: 3})
    with pytest.raises(ValueError):
        poly_pow(X, -1)


def test_rowling_polynomial():
    p = expand_phi_rowling(max_codegree=15)
    assert p.degree == 448
    assert [codegree_coefficient_of(p, d) for d in range(16)] == FANO_FAMILY_TABLE["rowling"]


@pytest.mark.slow
def test_full_expansion_matches_truncated():
    full = expand_phi_rowling()
    assert full.degree == 448
    assert codegree_coefficient_of(full, 448) == 0
    assert [codegree_coefficient_of(full, d) for d in range(16)] == FANO_FAMILY_TABLE["rowling"]


def test_codegree_out_of_range():
    with pytest.raises(HypergraphError):
        codegree_coefficient_of(X + 1, 5)

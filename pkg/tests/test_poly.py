import doctest
from itertools import combinations_with_replacement

import pytest
from hypothesis import given, strategies as st

from bruhat_regions import poly
from bruhat_regions.poly import (
    QPolynomial, all_q_number_factorizations, factor_into_q_numbers, format_q_numbers,
    is_palindromic, q_number, q_number_product,
)

coeff_lists = st.lists(st.integers(-20, 20), max_size=8)


def test_doctests():
    assert doctest.testmod(poly).failed == 0


def test_q_number():
    assert q_number(1) == QPolynomial.one()
    assert q_number(4).coefficients == (1, 1, 1, 1)
    for a in range(1, 10):
        assert q_number(a)(1) == a
    with pytest.raises(ValueError):
        q_number(0)


def test_ring_operations():
    p = QPolynomial((1, 2, 3))
    assert p * QPolynomial.one() == p
    assert p * 1 == p and 1 * p == p
    assert (q_number(2) * q_number(3)).coefficients == (1, 2, 2, 1)
    assert (p + p).coefficients == (2, 4, 6)
    assert (p - p).is_zero()
    assert QPolynomial((0, 0)).coefficients == ()
    assert QPolynomial((0, 1)) ** 3 == QPolynomial.monomial(3)


def test_example_product_degree():
    p = q_number_product([4, 2, 3, 4, 1, 2, 3])
    assert p.degree == 3 + 1 + 2 + 3 + 0 + 1 + 2 == 12
    assert p(1) == 4 * 2 * 3 * 4 * 1 * 2 * 3


def test_palindromic():
    assert is_palindromic(QPolynomial((1, 1)))
    assert is_palindromic(QPolynomial((1, 2, 1)))
    assert not is_palindromic(QPolynomial((1, 2, 2, 2)))
    with pytest.raises(ValueError):
        is_palindromic(QPolynomial())


def test_factor_examples():
    assert factor_into_q_numbers(QPolynomial.one()) == ()
    assert factor_into_q_numbers(QPolynomial((1, 2, 2, 1))) == (2, 3)
    assert factor_into_q_numbers(QPolynomial((1, 1, 1, 1, 1))) == (5,)
    assert factor_into_q_numbers(QPolynomial((1, 3, 6, 3, 1))) is None
    with pytest.raises(ValueError):
        factor_into_q_numbers(QPolynomial((2, 1)))


def _multisets(total):
    """Multisets of values >= 2 with sum(a - 1) <= total."""
    out = [()]

    def rec(prefix, smallest, budget):
        for a in range(smallest, budget + 2):
            ms = prefix + (a,)
            out.append(ms)
            rec(ms, a, budget - (a - 1))

    rec((), 2, total)
    return out


def test_factorization_roundtrip_exhaustive():
    family = _multisets(12)
    assert len(family) == len(set(family))
    for ms in family:
        p = q_number_product(ms)
        assert is_palindromic(p)
        assert factor_into_q_numbers(p) == ms
        assert all_q_number_factorizations(p) == [ms]


def test_ones_are_dropped():
    assert factor_into_q_numbers(q_number_product([1, 3, 1, 2])) == (2, 3)


def test_text_and_json():
    p = QPolynomial((1, 2, 2, 1))
    assert str(p) == "1 + 2*q + 2*q^2 + q^3"
    assert QPolynomial((0, -6, 11, -6, 1)).to_text("t") == "-6*t + 11*t^2 - 6*t^3 + t^4"
    assert str(QPolynomial()) == "0"
    assert QPolynomial.from_json(p.to_json()) == p
    assert format_q_numbers([4, 2, 3]) == "[4][2][3]"
    assert format_q_numbers([]) == "1"


def test_exact_division():
    p = q_number(3) * q_number(5)
    assert p.exact_quotient(q_number(5)) == q_number(3)
    assert q_number(3).exact_quotient(q_number(2)) is None


@given(st.integers(1, 15), st.integers(1, 15))
def test_q_numbers_multiply_at_one(a, b):
    assert (q_number(a) * q_number(b))(1) == a * b


@given(coeff_lists, coeff_lists, coeff_lists)
def test_ring_axioms(a, b, c):
    p, r, s = QPolynomial(a), QPolynomial(b), QPolynomial(c)
    assert p * r == r * p
    assert (p + r) * s == p * s + r * s
    assert (p * r)(2) == p(2) * r(2)
    if not p.is_zero() and not r.is_zero():
        assert (p * r).degree == p.degree + r.degree


@given(coeff_lists, st.lists(st.integers(-5, 5), min_size=1, max_size=4))
def test_divmod_identity(a, b):
    d = QPolynomial(tuple(b) + (1,))
    p = QPolynomial(a)
    quot, rem = p.divmod(d)
    assert quot * d + rem == p
    assert rem.degree < d.degree

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lerchphi import hurwitz as Hz
from lerchphi.errors import DomainError, ZeroB


def test_examples():
    for b in (0.3, -1.7, 2.0):
        assert Hz.hurwitz_zeta_neg(0, b).real == pytest.approx(0.5 - b, abs=1e-15)
    assert Hz.hurwitz_zeta_neg(1, 1).real == pytest.approx(-1 / 12, abs=1e-15)
    assert abs(Hz.hurwitz_zeta_neg(2, 0.5)) < 1e-15


def test_bernoulli_examples():
    assert Hz.bernoulli_poly(0, Fraction(3, 7)) == 1
    assert Hz.bernoulli_poly(1, 0) == Fraction(-1, 2)
    assert Hz.bernoulli_poly(4, 0) == Fraction(-1, 30)
    assert Hz.bernoulli_numbers(12)[12] == Fraction(-691, 2730)


def test_zero_b_dispatch():
    with pytest.raises(ZeroB):
        Hz.hurwitz_zeta_neg(3, 0)
    assert Hz.hurwitz_zeta_neg_bernoulli(3, 0) == Fraction(1, 120)
    assert Hz.hurwitz_zeta_neg_bernoulli(1, 0) == Fraction(-1, 12)


def test_degree_limit():
    with pytest.raises(DomainError):
        Hz.bernoulli_numbers(Hz.MAX_DEGREE + 1)


@pytest.mark.parametrize("k", range(0, 7))
@pytest.mark.parametrize("b", [Fraction(1, 2), Fraction(1, 3), Fraction(2)])
def test_exact_rational(k, b):
    assert Hz.hurwitz_zeta_neg_exact(k, b) == Hz.hurwitz_zeta_neg_bernoulli(k, b)


@given(st.integers(0, 10), st.floats(-2, 2).filter(lambda x: abs(x) > 1e-3))
def test_bernoulli_identity(k, b):
    B = Hz.bernoulli_poly(k + 1, b)
    got = Hz.hurwitz_zeta_neg(k, b)
    assert abs(got + B / (k + 1)) <= 1e-12 * max(1, abs(B))


@given(st.integers(1, 30))
def test_bernoulli_recurrence(n):
    B = Hz.bernoulli_numbers(n)
    from math import comb
    assert sum(comb(n + 1, j) * B[j] for j in range(n + 1)) == 0


@given(st.integers(0, 12), st.fractions(-3, 3, max_denominator=50))
def test_bernoulli_shift(n, x):
    # B_n(x + 1) - B_n(x) = n x^(n-1)
    lhs = Hz.bernoulli_poly(n, x + 1) - Hz.bernoulli_poly(n, x)
    assert lhs == (n * x ** (n - 1) if n else 0)


@pytest.mark.parametrize("k", [2, 3, 4])
@pytest.mark.parametrize("b", [0.25, 1 / 3, 0.5, 2 / 3])
def test_relation_residual(k, b):
    assert Hz.hurwitz_polylog_relation_residual(k, b) <= 1e-8


def test_relation_domain():
    with pytest.raises(DomainError):
        Hz.hurwitz_polylog_relation_residual(1, 0.5)
    with pytest.raises(DomainError):
        Hz.hurwitz_polylog_relation_residual(2, 1.0)

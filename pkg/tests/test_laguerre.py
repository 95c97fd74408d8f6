from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import rationals
from xlag.exactalg import ONE, ExactPoly
from xlag.laguerre import (
    LaguerreSpec,
    laguerre,
    laguerre_binomial,
    laguerre_derivative,
    moment,
    moment_inner_product,
    parameter_shift_expand,
)

X = ExactPoly.x()


def test_examples():
    a = Fraction(5, 3)
    assert laguerre(0, a) == ONE
    assert laguerre(1, a) == ExactPoly((a + 1, Fraction(-1)))
    assert laguerre(2, 0) == ExactPoly((Fraction(1), Fraction(-2), Fraction(1, 2)))
    assert laguerre(-1, a).is_zero() and laguerre(-4, a).is_zero()


def test_spec_validation():
    with pytest.raises(ValueError):
        LaguerreSpec(-1, Fraction(0))
    assert LaguerreSpec(3, "1/2").alpha == Fraction(1, 2)


@given(st.integers(0, 25), rationals(8, 7))
def test_matches_binomial_sum(n, a):
    p = laguerre(n, a)
    assert p == laguerre_binomial(n, a)
    assert p.degree == n
    assert p.lead == Fraction((-1) ** n, factorial(n))


@given(rationals(8, 7))
def test_three_term_recurrence(a):
    for n in range(1, 41):
        lhs = laguerre(n + 1, a).scale(n + 1)
        rhs = laguerre(n, a) * ExactPoly((2 * n + 1 + a, Fraction(-1))) - laguerre(n - 1, a).scale(n + a)
        assert lhs == rhs


@given(st.integers(0, 20), rationals(6, 5))
def test_eigen_equation(n, a):
    L = laguerre(n, a)
    d1, d2 = L.derivative(), L.derivative().derivative()
    assert (X * d2 + ExactPoly((a + 1, Fraction(-1))) * d1 + L.scale(n)).is_zero()


def test_derivative_examples():
    a = Fraction(2, 7)
    assert laguerre_derivative(3, a, 1) == laguerre(2, a + 1).scale(-1)
    assert laguerre_derivative(5, a, 0) == laguerre(5, a)
    assert laguerre_derivative(2, a, 5).is_zero()
    with pytest.raises(ValueError):
        laguerre_derivative(2, a, -1)


@given(st.integers(0, 15), rationals(), st.integers(0, 6))
def test_derivative_matches_polynomial_derivative(n, a, j):
    p = laguerre(n, a)
    for _ in range(j):
        p = p.derivative()
    assert p == laguerre_derivative(n, a, j)


@pytest.mark.parametrize("n, l, expected", [(4, 0, [1]), (1, 1, [1, -1]), (3, 2, [1, -2, 1])])
def test_parameter_shift_examples(n, l, expected):
    assert parameter_shift_expand(n, Fraction(1, 3), l) == expected


@given(st.integers(0, 15), rationals(), st.integers(0, 8))
def test_parameter_shift_reassembly(n, a, l):
    cs = parameter_shift_expand(n, a, l)
    total = ExactPoly()
    for k, c in enumerate(cs):
        total = total + laguerre(n - k, a + l).scale(c)
    assert total == laguerre(n, a)


def test_moment_examples():
    assert moment_inner_product(ONE, ONE, Fraction(7, 3)) == 1
    a = Fraction(-1, 2)
    assert moment_inner_product(laguerre(1, a), ONE, a) == 0
    assert moment_inner_product(X * X, ONE, Fraction(1, 2)) == Fraction(15, 4)
    assert moment(2, Fraction(1, 2)) == Fraction(15, 4)
    for bad in (-1, Fraction(-3, 2)):
        with pytest.raises(ValueError, match="beta > -1"):
            moment_inner_product(ONE, ONE, bad)


@pytest.mark.parametrize("a", [Fraction(0), Fraction(1, 2), Fraction(7, 3)])
def test_exact_orthogonality(a):
    Ls = [laguerre(n, a) for n in range(16)]
    for n in range(16):
        for m in range(n):
            assert moment_inner_product(Ls[n], Ls[m], a) == 0
        # norm: Gamma(n+a+1) / (n! Gamma(a+1))
        norm = moment(n, a) / factorial(n)
        assert moment_inner_product(Ls[n], Ls[n], a) == norm

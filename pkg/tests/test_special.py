import math

import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import integrate, stats

from xlag.special import bessel_entire, bessel_j, bessel_zero, bessel_zeros, ks_distance, mp_cdf, mp_density

orders = st.floats(-0.95, 12, allow_nan=False)


@given(orders, st.floats(0.01, 80))
def test_bessel_j_matches_mpmath(nu, x):
    assert bessel_j(nu, x) == pytest.approx(float(mpmath.besselj(nu, x)), abs=1e-13)


@given(orders, st.floats(0.01, 60))
def test_bessel_entire_relation(nu, x):
    expected = 2 ** nu * x ** (-nu / 2) * float(mpmath.besselj(nu, math.sqrt(x)))
    assert bessel_entire(nu, x).real == pytest.approx(expected, rel=1e-10, abs=1e-14)


def test_bessel_entire_at_origin():
    assert bessel_entire(3, 0) == pytest.approx(1 / 6)
    assert bessel_entire(-2, 0) == 0


@pytest.mark.parametrize("nu", [0, 0.5, 1, 3, 7.25])
def test_bessel_zeros_match_mpmath(nu):
    zs = bessel_zeros(nu, 6)
    for k, z in enumerate(zs, start=1):
        assert z == pytest.approx(float(mpmath.besseljzero(nu, k)), abs=1e-12)


def test_bessel_zero_examples():
    assert bessel_zero(0.5, 1) == pytest.approx(math.pi, abs=1e-13)
    # J_{-1/2}(x) is proportional to cos x
    assert bessel_zeros(-0.5, 3) == pytest.approx([math.pi / 2, 3 * math.pi / 2, 5 * math.pi / 2], abs=1e-13)
    with pytest.raises(ValueError):
        bessel_zero(1, 0)
    with pytest.raises(ValueError):
        bessel_zeros(-1, 1)


@given(st.floats(-0.9, 10), st.floats(-0.9, 10))
def test_zeros_interlace_in_order(a, b):
    """j_{nu,k} increases with nu."""
    lo, hi = sorted((a, b))
    for x, y in zip(bessel_zeros(lo, 3), bessel_zeros(hi, 3)):
        assert x <= y + 1e-12


@pytest.mark.parametrize("x", [0.01, 0.5, 1.0, 2.0, 3.3, 3.99])
def test_mp_cdf_matches_quadrature(x):
    value, _ = integrate.quad(mp_density, 0, x, limit=200)
    assert mp_cdf(x) == pytest.approx(value, abs=1e-9)


def test_mp_cdf_support():
    assert mp_cdf(-1) == 0 and mp_cdf(0) == 0
    assert mp_cdf(4) == 1 and mp_cdf(9) == 1
    assert mp_cdf(2) == pytest.approx(0.5 + 1 / math.pi)


@given(st.lists(st.floats(0.001, 5), min_size=1, max_size=40))
def test_ks_distance_matches_scipy(xs):
    expected = stats.kstest(xs, np.vectorize(mp_cdf)).statistic
    assert ks_distance(xs) == pytest.approx(expected, abs=1e-12)


def test_ks_distance_empty():
    assert ks_distance([]) == 1.0

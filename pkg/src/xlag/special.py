"""Bessel functions of the first kind, their positive zeros, and the Marchenko-Pastur law."""
from __future__ import annotations

import math

import mpmath
from scipy.optimize import brentq
from scipy.special import jv


def bessel_j(nu: float, x: float) -> float:
    """J_nu(x) for x >= 0."""
    if x < 0:
        raise ValueError(f"bessel_j needs x >= 0, got {x}")
    return float(jv(nu, x))


def bessel_entire(nu: float, x: complex) -> complex:
    """sum_k (-x/4)^k / (k! Gamma(k+nu+1)) = 2^nu x^{-nu/2} J_nu(sqrt x), entire in x."""
    with mpmath.workdps(30):
        z = -mpmath.mpc(x) / 4
        if float(nu).is_integer() and nu < 0:
            # 1/Gamma kills the first -nu terms; reindex k = j - nu
            m = int(-nu)
            return complex(z ** m * mpmath.hyp0f1(m + 1, z) / mpmath.factorial(m))
        return complex(mpmath.hyp0f1(nu + 1, z) * mpmath.rgamma(nu + 1))


def bessel_zeros(nu: float, count: int) -> list[float]:
    """The first ``count`` positive zeros of J_nu, nu > -1."""
    if nu <= -1:
        raise ValueError(f"bessel zeros need nu > -1, got {nu}")
    zeros: list[float] = []
    # consecutive zeros are more than 2 apart for nu > -1, so a 0.1 grid brackets each one
    lo = 1e-3
    flo = jv(nu, lo)
    while len(zeros) < count:
        hi = lo + 0.1
        fhi = jv(nu, hi)
        if fhi == 0 or (fhi > 0) != (flo > 0):
            zeros.append(brentq(lambda t: jv(nu, t), lo, hi, xtol=1e-15, rtol=1e-15))
        lo, flo = hi, fhi
    return zeros


def bessel_zero(nu: float, k: int) -> float:
    """j_{nu,k}, the k-th positive zero of J_nu."""
    if k < 1:
        raise ValueError(f"zero index must be positive, got {k}")
    return bessel_zeros(nu, k)[-1]


def mp_cdf(x: float) -> float:
    """CDF of the Marchenko-Pastur law (1/2pi) sqrt((4-x)/x) dx on [0, 4]."""
    if x <= 0:
        return 0.0
    if x >= 4:
        return 1.0
    phi = math.asin(math.sqrt(x) / 2.0)
    return (2.0 * phi + math.sin(2.0 * phi)) / math.pi


def mp_density(x: float) -> float:
    if x <= 0 or x >= 4:
        return 0.0
    return math.sqrt((4.0 - x) / x) / (2.0 * math.pi)


def ks_distance(samples, cdf=mp_cdf) -> float:
    """Kolmogorov distance between the empirical CDF of ``samples`` and ``cdf``."""
    ys = sorted(samples)
    n = len(ys)
    if n == 0:
        return 1.0
    d = 0.0
    for j, y in enumerate(ys, start=1):
        f = cdf(y)
        d = max(d, abs(j / n - f), abs((j - 1) / n - f))
    return d

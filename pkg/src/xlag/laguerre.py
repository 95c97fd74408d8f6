"""Classical Laguerre polynomials with exact rational coefficients."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .exactalg import ExactPoly, ZERO, parse_rational, rising


@dataclass(frozen=True)
class LaguerreSpec:
    n: int
    alpha: Fraction

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"Laguerre degree must be non-negative, got {self.n}")
        object.__setattr__(self, "alpha", parse_rational(self.alpha))


def gen_binom(top: Fraction, k: int) -> Fraction:
    """Binomial coefficient C(top, k) for rational top and integer k >= 0."""
    out = Fraction(1)
    for i in range(k):
        out = out * (top - i) / (i + 1)
    return out


@lru_cache(maxsize=4096)
def _laguerre(n: int, alpha: Fraction) -> ExactPoly:
    if n < 0:
        return ZERO
    # L_n^(a)(x) = sum_k C(n+a, n-k) (-x)^k / k!, built from the top coefficient down
    coeffs = [Fraction(0)] * (n + 1)
    c = Fraction((-1) ** n, factorial(n))
    coeffs[n] = c
    for k in range(n, 0, -1):
        # ratio c_{k-1}/c_k = -k (a+k) / (n-k+1)
        c = -c * k * (alpha + k) / (n - k + 1)
        coeffs[k - 1] = c
    return ExactPoly(tuple(coeffs))


def laguerre(n: int, alpha) -> ExactPoly:
    """L_n^(alpha); the zero polynomial for n < 0."""
    return _laguerre(int(n), parse_rational(alpha))


def laguerre_binomial(n: int, alpha) -> ExactPoly:
    """Direct binomial-sum construction (used as a cross-check)."""
    alpha = parse_rational(alpha)
    if n < 0:
        return ZERO
    return ExactPoly(tuple(gen_binom(n + alpha, n - k) * (-1) ** k / factorial(k) for k in range(n + 1)))


def laguerre_derivative(n: int, alpha, j: int) -> ExactPoly:
    """j-th derivative of L_n^(alpha), i.e. (-1)^j L_{n-j}^(alpha+j)."""
    if j < 0:
        raise ValueError("derivative order must be non-negative")
    alpha = parse_rational(alpha)
    return laguerre(n - j, alpha + j).scale((-1) ** j)


def parameter_shift_expand(n: int, alpha, l: int) -> list[Fraction]:
    """Coefficients c_k with L_n^(alpha) = sum_k c_k L_{n-k}^(alpha+l); c_k = (-1)^k C(l, k)."""
    if l < 0:
        raise ValueError("parameter shift must be non-negative")
    return [Fraction((-1) ** k * comb(l, k)) for k in range(min(l, n) + 1)]


def moment_inner_product(P: ExactPoly, Q: ExactPoly, beta) -> Fraction:
    """int_0^inf P Q x^beta e^{-x} dx / Gamma(beta + 1), exactly."""
    beta = parse_rational(beta)
    if beta <= -1:
        raise ValueError(f"moment inner product requires beta > -1, got {beta}")
    prod = P * Q
    total = Fraction(0)
    moment = Fraction(1)
    for k, c in enumerate(prod.coeffs):
        if k:
            moment *= beta + k
        total += c * moment
    return total


def moment(k: int, beta) -> Fraction:
    return rising(parse_rational(beta), k)

"""Numerical probes of the large-degree behaviour of exceptional Laguerre zeros and values."""
from __future__ import annotations

import math
from functools import lru_cache
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import mpmath
import numpy as np

from .exactalg import ExactPoly, parse_rational
from .glp import omega
from .laguerre import laguerre
from .partition import PartitionLike, as_partition, degree_set, is_even
from .special import bessel_entire, ks_distance, mp_cdf
from .xlp import xlp
from .zeros import XlpEvaluator, classify, laguerre_nodes, omega_zeros, roots, smallest_regular_zeros, xlp_zeros


def _setup(lam, mu, alpha):
    lam, mu = as_partition(lam), as_partition(mu)
    alpha = parse_rational(alpha)
    return lam, mu, alpha, lam.length + mu.length


def _require_positive_shift(alpha: Fraction, r: int):
    if alpha + r <= -1:
        raise ValueError(f"requires α+r > −1, got α+r = {alpha + r}")


def _require_degree(lam, mu, n):
    if not degree_set(lam, mu, n):
        raise ValueError(f"n not in degree sequence ℕ_{{λ,μ}}: n={n}, λ=({lam}), μ=({mu})")


@dataclass(frozen=True)
class Weight:
    """W(x) = x^{alpha+r} e^{-x} / Omega(x)^2."""

    alpha: Fraction
    r: int
    omega: ExactPoly

    @classmethod
    def of(cls, lam: PartitionLike, mu: PartitionLike, alpha) -> "Weight":
        lam, mu, alpha, r = _setup(lam, mu, alpha)
        return cls(alpha, r, omega(lam, mu, alpha))

    def __call__(self, x):
        om = self.omega.eval_mp(x)
        return mpmath.power(x, mpmath.mpf(self.alpha.numerator) / self.alpha.denominator + self.r) * mpmath.exp(-x) / om ** 2


# --------------------------------------------------------------------------- Mehler-Heine


def mehler_heine_target(lam: PartitionLike, mu: PartitionLike, alpha, x: complex) -> complex:
    """Omega(0) 2^{nu} x^{-nu/2} J_nu(sqrt x) with nu = alpha+r, as an entire function of x."""
    lam, mu, alpha, r = _setup(lam, mu, alpha)
    om0 = float(omega(lam, mu, alpha)[0])
    return om0 * bessel_entire(float(alpha) + r, x)


def mehler_heine_probe(lam: PartitionLike, mu: PartitionLike, alpha, n: int, x: complex) -> complex:
    """(-1)^r n^{-(alpha+r)} xlp(x/(4n)), evaluated in double precision."""
    lam, mu, alpha, r = _setup(lam, mu, alpha)
    _require_degree(lam, mu, n)
    ev = XlpEvaluator(lam, mu, alpha, n)
    mant, logscale = ev.log_value(np.array([complex(x) / (4 * n)]))
    sign = -1 if r % 2 else 1
    return complex(sign * mant[0] * np.exp(logscale[0] - (float(alpha) + r) * math.log(n)))


def regular_zero_scaling(lam: PartitionLike, mu: PartitionLike, alpha, n: int, k: int) -> float:
    """sqrt(4 n x_{k,n}) for the k-th smallest regular zero."""
    lam, mu, alpha, r = _setup(lam, mu, alpha)
    _require_positive_shift(alpha, r)
    _require_degree(lam, mu, n)
    if omega(lam, mu, alpha)[0] == 0:
        raise ValueError("requires Ω(0) ≠ 0")
    if n <= 60:
        reg = sorted(z.point.real for z in xlp_zeros(lam, mu, alpha, n).regular() for _ in range(z.multiplicity))
    else:
        reg = smallest_regular_zeros(lam, mu, alpha, n, k)
    if len(reg) < k:
        raise ValueError(f"fewer than k={k} regular zeros at n={n}")
    return math.sqrt(4 * n * reg[k - 1])


# --------------------------------------------------------------------------- Marchenko-Pastur


def normalized_regular_zeros(lam: PartitionLike, mu: PartitionLike, alpha, n: int) -> list[float]:
    """{x_{j,n} / N(n)} over the regular zeros, with multiplicity."""
    zs = xlp_zeros(lam, mu, alpha, n)
    N, reg, _ = classify(zs)
    return [z.point.real / N for z in reg for _ in range(z.multiplicity)]


def mp_ks_distance(lam: PartitionLike, mu: PartitionLike, alpha, n: int) -> float:
    """Kolmogorov distance to the Marchenko-Pastur law; 1 when there is no regular zero."""
    lam, mu, alpha, r = _setup(lam, mu, alpha)
    _require_positive_shift(alpha, r)
    _require_degree(lam, mu, n)
    return ks_distance(normalized_regular_zeros(lam, mu, alpha, n), mp_cdf)


# --------------------------------------------------------------------------- exceptional zeros


@dataclass
class AttractionReport:
    records: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def scaled(self) -> dict[int, float]:
        """max_j min_distance * sqrt(n), per n."""
        out: dict[int, float] = {}
        for rec in self.records:
            v = rec["min_distance"] * math.sqrt(rec["n"])
            out[rec["n"]] = max(out.get(rec["n"], 0.0), v)
        return out


def _simple_offaxis_omega_zeros(lam, mu, alpha, report: AttractionReport) -> list[complex]:
    out = []
    for z in omega_zeros(lam, mu, alpha).zeros:
        if z.multiplicity > 1:
            report.notes.append(f"skipped Ω-zero {z.point}: multiplicity {z.multiplicity}")
        elif abs(z.point.imag) <= 1e-10 * (1 + abs(z.point)) and z.point.real >= 0:
            report.notes.append(f"skipped Ω-zero {z.point}: lies on [0,∞)")
        else:
            out.append(z.point)
    return out


def exceptional_attraction(lam: PartitionLike, mu: PartitionLike, alpha, n_list: Iterable[int]) -> AttractionReport:
    """For each simple Omega-zero z_j off [0,inf) and each n: min_k |z_j - z_{k,n}| over exceptional zeros."""
    lam, mu, alpha, r = _setup(lam, mu, alpha)
    _require_positive_shift(alpha, r)
    report = AttractionReport()
    targets = _simple_offaxis_omega_zeros(lam, mu, alpha, report) if lam.weight + mu.weight else []
    for n in n_list:
        _require_degree(lam, mu, n)
        if not targets:
            continue
        exc = [z.point for z in xlp_zeros(lam, mu, alpha, n).exceptional()]
        for zj in targets:
            d = min((abs(zj - w) for w in exc), default=math.inf)
            report.records.append({"n": n, "z_re": zj.real, "z_im": zj.imag, "min_distance": d})
    return report


@lru_cache(maxsize=32)
def _xlp_roots(lam, mu, alpha, n, precision):
    return roots(xlp(lam, mu, alpha, n), precision)


def logder_identity_residual(lam: PartitionLike, mu: PartitionLike, alpha, n: int, z_j: complex, precision: int = 256) -> float:
    """Relative residual of the zero-sum identity at a simple Omega-zero.

    sum_k 1/(z_j - x_k) over all zeros of xlp equals 1/2 - (alpha+r)/(2 z_j) + sum_{k != j} 1/(z_j - z_k)
    over the other Omega-zeros. The residual is scaled by the sum of absolute values of all terms.
    """
    lam, mu, alpha, r = _setup(lam, mu, alpha)
    _require_degree(lam, mu, n)
    oz = roots(omega(lam, mu, alpha), precision)
    near = min(oz.zeros, key=lambda z: abs(z.point - complex(z_j)))
    if abs(near.point - complex(z_j)) > 1e-6 * (1 + abs(complex(z_j))):
        raise ValueError(f"z_j={z_j} is not a zero of Ω")
    if near.multiplicity > 1:
        raise ValueError(f"z_j={z_j} is not a simple zero of Ω (multiplicity {near.multiplicity})")
    xz = _xlp_roots(lam, mu, alpha, n, precision)
    with mpmath.workprec(precision):
        zj = near.mp_point
        if any(abs(zj - w) <= mpmath.mpf(2) ** (-precision // 2) * (1 + abs(zj)) for w in xz.mp_points(False)):
            raise ValueError(f"z_j={z_j} is also a zero of the exceptional polynomial")
        lhs_terms = [1 / (zj - w) for w in xz.mp_points()]
        beta = mpmath.mpf(alpha.numerator) / alpha.denominator + r
        rhs_terms = [mpmath.mpf(1) / 2, -beta / (2 * zj)]
        rhs_terms += [1 / (zj - w) for z in oz.zeros if z is not near for w in [z.mp_point] * z.multiplicity]
        diff = abs(mpmath.fsum(lhs_terms) - mpmath.fsum(rhs_terms))
        scale = mpmath.fsum(abs(t) for t in lhs_terms + rhs_terms)
        return float(diff / scale)


# --------------------------------------------------------------------------- interlacing and orthogonality


def interlacing_count(lam: PartitionLike, mu: PartitionLike, alpha, n: int) -> int:
    """Number of intervals between consecutive zeros of L_n^{(alpha+r)} that contain a zero of xlp.

    Without a genuine deformation (lambda = mu = empty) both polynomials share all zeros and
    every one of the n-1 intervals is counted by convention.
    """
    lam, mu, alpha, r = _setup(lam, mu, alpha)
    _require_positive_shift(alpha, r)
    t = 2 * (lam.weight + mu.weight) + mu.length
    if n <= t:
        raise ValueError(f"requires n > 2(|λ|+|μ|)+r₂ = {t}, got n={n}")
    _require_degree(lam, mu, n)
    if lam.weight + mu.weight == 0:
        return n - 1
    beta = alpha + r
    if n <= 60:
        a = sorted(z.point.real for z in roots(laguerre(n, beta)).zeros)
    else:
        a = sorted(laguerre_nodes(n, float(beta)))
    reg = sorted(z.point.real for z in xlp_zeros(lam, mu, alpha, n).regular())
    count = 0
    for lo, hi in zip(a, a[1:]):
        if any(lo < x < hi for x in reg):
            count += 1
    return count


def orthogonality_quadrature(lam: PartitionLike, mu: PartitionLike, alpha, n: int, m: int, dps: int = 30) -> float:
    """<xlp_n, xlp_m>_W / sqrt(<xlp_n, xlp_n>_W <xlp_m, xlp_m>_W) by adaptive quadrature on (0, inf)."""
    lam, mu, alpha, r = _setup(lam, mu, alpha)
    if alpha <= -1:
        raise ValueError(f"requires α > −1, got α = {alpha}")
    if not is_even(lam):
        raise ValueError(f"requires λ even (positive weight), got λ=({lam})")
    _require_degree(lam, mu, n)
    _require_degree(lam, mu, m)
    if n == m:
        return 1.0
    w = Weight.of(lam, mu, alpha)
    pn, pm = xlp(lam, mu, alpha, n), xlp(lam, mu, alpha, m)
    # the exact coefficients alternate in sign, so carry extra digits for large degrees
    with mpmath.workdps(dps + max(n, m)):
        cuts = [0, 1, 4, 16, 48, 120, mpmath.inf]

        def integral(P, Q):
            return mpmath.quad(lambda x: P.eval_mp(x) * Q.eval_mp(x) * w(x), cuts)

        return float(integral(pn, pm) / mpmath.sqrt(integral(pn, pn) * integral(pm, pm)))


# --------------------------------------------------------------------------- simple-zero scan


def simple_zero_scan(lam: PartitionLike, mu: PartitionLike, alpha_grid: Sequence, precision: Optional[int] = None) -> list[dict]:
    """For each alpha, the roots of Omega of multiplicity > 1."""
    lam, mu = as_partition(lam), as_partition(mu)
    out = []
    for a in alpha_grid:
        a = parse_rational(a)
        p = omega(lam, mu, a)
        if p.degree < 1:
            out.append({"alpha": a, "degree": int(p.degree) if p else None, "nonsimple": []})
            continue
        zs = roots(p, precision)
        multiple = [(z.point, z.multiplicity) for z in zs.zeros if z.multiplicity > 1]
        out.append({"alpha": a, "degree": int(p.degree), "nonsimple": multiple})
    return out

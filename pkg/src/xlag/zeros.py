"""Polynomial root finding, multiplicities and regular/exceptional classification.

Two engines are provided. :func:`roots` works on exact polynomials: it splits off
repeated factors exactly and runs Aberth-Ehrlich iteration in multiprecision.
:class:`XlpEvaluator` evaluates exceptional Laguerre polynomials of large degree in
double precision through the cofactor form and scaled three-term recurrences, and
:func:`xlp_zeros_float` runs a vectorized Aberth iteration on top of it.
"""
from __future__ import annotations

import cmath
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

import mpmath
import numpy as np
from scipy.linalg import eigvalsh_tridiagonal
from scipy.optimize import brentq

from .exactalg import ExactPoly, parse_rational, squarefree_decomposition
from .glp import omega
from .partition import PartitionLike, as_partition, degrees
from .special import bessel_zeros
from .xlp import XlpSpec, cofactors, xlp

REGULAR_IM_TOL = 1e-10
ORIGIN_TOL = 1e-12
CLUSTER_RADIUS = 1e-8
EXACT_SQUAREFREE_MAX_DEGREE = 160
STALL_TOL = 1e-9


class InsufficientPrecision(RuntimeError):
    """Root iteration did not reach the backward-error target; retry with more bits."""


def default_precision() -> int:
    return int(os.environ.get("XLAG_PRECISION_BITS", "256"))


@dataclass(frozen=True)
class Zero:
    point: complex
    multiplicity: int
    kind: str  # "regular" or "exceptional"
    mp_point: object = field(default=None, compare=False, repr=False)


def classify_point(z: complex) -> str:
    if abs(z.imag) <= REGULAR_IM_TOL * (1 + abs(z)) and z.real > ORIGIN_TOL:
        return "regular"
    return "exceptional"


@dataclass
class ZeroSet:
    zeros: list[Zero]
    degree: int
    precision: int = 53
    residual: float = 0.0

    def __post_init__(self):
        total = sum(z.multiplicity for z in self.zeros)
        if total != self.degree:
            raise AssertionError(f"multiplicities sum to {total}, expected degree {self.degree}")

    def __len__(self) -> int:
        return len(self.zeros)

    def points(self, with_multiplicity: bool = True) -> list[complex]:
        out = []
        for z in self.zeros:
            out.extend([z.point] * (z.multiplicity if with_multiplicity else 1))
        return out

    def mp_points(self, with_multiplicity: bool = True) -> list:
        out = []
        for z in self.zeros:
            p = z.mp_point if z.mp_point is not None else mpmath.mpc(z.point)
            out.extend([p] * (z.multiplicity if with_multiplicity else 1))
        return out

    def regular(self) -> list[Zero]:
        return [z for z in self.zeros if z.kind == "regular"]

    def exceptional(self) -> list[Zero]:
        return [z for z in self.zeros if z.kind == "exceptional"]

    def count_regular(self) -> int:
        return sum(z.multiplicity for z in self.regular())

    def rows(self) -> list[tuple[float, float, int, str]]:
        return [(z.point.real, z.point.imag, z.multiplicity, z.kind) for z in self.zeros]

    def to_csv(self) -> str:
        lines = ["re,im,multiplicity,class"]
        for re_, im_, m, k in self.rows():
            lines.append(f"{re_:.16e},{im_:.16e},{m},{k}")
        return "\n".join(lines) + "\n"


def classify(zs: ZeroSet) -> tuple[int, list[Zero], list[Zero]]:
    """(N, regular, exceptional) with N counted with multiplicity."""
    reg, exc = zs.regular(), zs.exceptional()
    return sum(z.multiplicity for z in reg), reg, exc


def _sort_key(z: complex):
    return (round(z.real, 12), z.imag)


def _make_zero(z_mp, mult: int) -> Zero:
    z = complex(z_mp)
    return Zero(z, mult, classify_point(z), z_mp)


# --------------------------------------------------------------------------- multiprecision Aberth


def _newton_polygon_start(coeffs: list, n: int) -> list:
    """Starting points on circles whose radii come from the upper hull of log|a_k|."""
    logs = []
    for k, c in enumerate(coeffs):
        logs.append((k, float(mpmath.log(abs(c))) if c != 0 else -math.inf))
    pts = [(k, v) for k, v in logs if v > -math.inf]
    hull: list[tuple[int, float]] = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (y2 - y1) * (p[0] - x1) <= (p[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(p)
    out = []
    for (i, yi), (j, yj) in zip(hull, hull[1:]):
        m = j - i
        radius = math.exp((yi - yj) / m)
        for t in range(m):
            ang = 2 * math.pi * t / m + 2 * math.pi * i / max(n, 1) + 0.4
            out.append(mpmath.mpc(radius * math.cos(ang), radius * math.sin(ang)))
    return out


def _companion_start(coeffs: list, n: int) -> Optional[list]:
    """Double-precision eigenvalue estimates, or None if coefficients do not fit in a double."""
    try:
        scale = max(abs(c) for c in coeffs)
        fl = [float(c / scale) for c in reversed(coeffs)]
    except (OverflowError, ValueError):
        return None
    if not all(math.isfinite(v) for v in fl) or fl[0] == 0 or fl[-1] == 0:
        return None
    est = np.roots(fl)
    if len(est) != n or not np.all(np.isfinite(est)):
        return None
    # break exact coincidences so that the Aberth correction stays finite
    out = []
    for k, z in enumerate(est):
        z = complex(z)
        z += (abs(z) + 1e-3) * 1e-9 * cmath.exp(1j * (k + 0.5))
        out.append(mpmath.mpc(z.real, z.imag))
    return out


def _to_mp(c):
    if isinstance(c, Fraction):
        return mpmath.mpf(c.numerator) / c.denominator
    if isinstance(c, (mpmath.mpf, mpmath.mpc)):
        return +c
    return mpmath.mpf(c)


def aberth_mp(coeffs: list, prec: int, maxiter: int = 400) -> list:
    """All roots of sum coeffs[k] x^k (Fractions or mpmath numbers, nonzero constant and leading terms)."""
    n = len(coeffs) - 1
    if n < 1:
        return []
    with mpmath.workprec(prec):
        a = [_to_mp(c) for c in coeffs]
        lead = a[-1]
        a = [c / lead for c in a]
        if n == 1:
            return [-a[0]]
        absa = [abs(c) for c in a]
        da = [k * a[k] for k in range(1, n + 1)]
        eps = mpmath.mpf(2) ** (-prec)
        z = _companion_start(a, n) or _newton_polygon_start(a, n)
        done = [False] * n
        for _ in range(maxiter):
            moved = False
            for k in range(n):
                if done[k]:
                    continue
                zk = z[k]
                p = a[n]
                for c in reversed(a[:-1]):
                    p = p * zk + c
                dp = da[-1]
                for c in reversed(da[:-1]):
                    dp = dp * zk + c
                bound = absa[n]
                az = abs(zk)
                for c in reversed(absa[:-1]):
                    bound = bound * az + c
                if abs(p) <= 16 * n * eps * bound:
                    done[k] = True
                    continue
                ratio = p / dp if dp != 0 else mpmath.mpc(eps, eps)
                s = mpmath.mpf(0)
                for j in range(n):
                    if j != k:
                        s += 1 / (zk - z[j])
                w = ratio / (1 - ratio * s)
                z[k] = zk - w
                moved = True
                if abs(w) <= eps * 4 * max(abs(z[k]), eps):
                    done[k] = True
            if not moved or all(done):
                break
        else:
            raise InsufficientPrecision(f"Aberth iteration did not converge at {prec} bits")
        if not all(done):
            raise InsufficientPrecision(f"Aberth iteration did not converge at {prec} bits")
        return z


def _cluster(points: list, radius: float) -> list[list[int]]:
    groups: list[list[int]] = []
    centers: list[complex] = []
    for i, p in enumerate(points):
        pc = complex(p)
        for g, c in zip(groups, centers):
            if abs(pc - c) <= radius * max(1.0, abs(c)):
                g.append(i)
                break
        else:
            groups.append([i])
            centers.append(pc)
    return groups


def roots(p: ExactPoly, precision: Optional[int] = None, cluster_radius: float = CLUSTER_RADIUS) -> ZeroSet:
    """All complex roots of an exact polynomial with multiplicities.

    Repeated factors are split off exactly (Yun) up to a degree cap; above it the
    roots of ``p`` itself are clustered at ``cluster_radius * max(1, |z|)``.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no finite root set")
    prec = precision or default_precision()
    deg = int(p.degree)
    out: list[Zero] = []
    k0 = p.low_order()
    if k0:
        out.append(Zero(0j, k0, "exceptional", mpmath.mpc(0)))
        p = p.shift_degree(-k0)
    if p.degree >= 1:
        if p.degree <= EXACT_SQUAREFREE_MAX_DEGREE:
            for f, mult in squarefree_decomposition(p):
                for z in aberth_mp(list(f.coeffs), prec):
                    out.append(_make_zero(z, mult))
        else:
            pts = aberth_mp(list(p.coeffs), prec)
            for g in _cluster(pts, cluster_radius):
                with mpmath.workprec(prec):
                    c = sum(pts[i] for i in g) / len(g)
                if len(g) > 1 and not certify_multiplicity(p, c, len(g), prec):
                    raise InsufficientPrecision(f"cluster of size {len(g)} near {complex(c)} failed the derivative test")
                out.append(_make_zero(c, len(g)))
    out = _symmetrize(out, prec)
    out.sort(key=lambda z: _sort_key(z.point))
    return ZeroSet(out, deg, prec, residual_check(ExactPoly(p.coeffs), out, prec) if p.degree >= 1 else 0.0)


def _symmetrize(zs: list[Zero], prec: int) -> list[Zero]:
    """Real coefficients: snap roots that are real to working precision onto the axis."""
    out = []
    for z in zs:
        if z.mp_point is not None and z.point.imag != 0:
            with mpmath.workprec(prec):
                mp_im = abs(mpmath.im(z.mp_point))
                near = mp_im <= mpmath.mpf(2) ** (-prec // 2) * (1 + abs(z.mp_point))
                pt = mpmath.mpc(mpmath.re(z.mp_point), 0)
            if near and _is_isolated_real(z, zs):
                out.append(Zero(complex(pt.real, 0.0), z.multiplicity, classify_point(complex(pt.real, 0.0)), pt))
                continue
        out.append(z)
    return out


def _is_isolated_real(z: Zero, zs: list[Zero]) -> bool:
    """A near-real root with no distinct conjugate partner must be real."""
    target = z.point.conjugate()
    for w in zs:
        if w is z:
            continue
        if abs(w.point - target) <= 4 * abs(z.point.imag) + 1e-300:
            return False
    return True


def residual_check(p: ExactPoly, zs: list[Zero], prec: int) -> float:
    """Largest backward error |p(z)| / sum |a_k||z|^k over the computed roots."""
    worst = 0.0
    with mpmath.workprec(prec):
        absc = [abs(c) for c in p.mp_coeffs()]
        for z in zs:
            zz = z.mp_point if z.mp_point is not None else mpmath.mpc(z.point)
            if zz == 0:
                continue
            v = abs(p.eval_mp(zz))
            b = mpmath.mpf(0)
            for c in reversed(absc):
                b = b * abs(zz) + c
            worst = max(worst, float(v / b) if b else 0.0)
    return worst


def certify_multiplicity(p: ExactPoly, center, mult: int, prec: int, tol: float = 1e-6) -> bool:
    """Derivative-order test: p^{(j)}(c) small for j < mult and p^{(mult)}(c) not small."""
    with mpmath.workprec(prec):
        c = mpmath.mpc(center)
        q = p
        for j in range(mult + 1):
            v = abs(q.eval_mp(c))
            ref = max(abs(x) for x in q.mp_coeffs()) * max(1, abs(c)) ** int(q.degree)
            rel = float(v / ref) if ref else 0.0
            if j < mult and rel > tol:
                return False
            if j == mult:
                return rel > tol ** 2
            q = q.derivative()
    return True


# --------------------------------------------------------------------------- large-degree evaluation


def _laguerre_scaled(k: int, beta: float, z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """L_k^{(beta)}(z) as mantissa * exp(logscale), by the three-term recurrence."""
    shape = z.shape
    logs = np.zeros(shape)
    if k < 0:
        return np.zeros(shape, dtype=complex), logs
    prev = np.zeros(shape, dtype=complex)
    cur = np.ones(shape, dtype=complex)
    for j in range(k):
        nxt = ((2 * j + 1 + beta - z) * cur - (j + beta) * prev) / (j + 1)
        prev, cur = cur, nxt
        if j % 16 == 15:
            mag = np.abs(cur)
            big = mag > 1e100
            if np.any(big):
                f = np.where(big, mag, 1.0)
                prev = prev / f
                cur = cur / f
                logs = logs + np.log(f)
    return cur, logs


class XlpEvaluator:
    """Double-precision evaluation of xlp and xlp' through the cofactor form.

    With F_i = L^{(alpha+i)}_{s-i}: xlp = sum_i (-1)^i Q_i F_i and, since F_i' = -F_{i+1},
    xlp' = sum_i (-1)^i (Q_i' F_i - Q_i F_{i+1}).
    """

    def __init__(self, lam: PartitionLike, mu: PartitionLike, alpha, n: int):
        spec = XlpSpec(as_partition(lam), as_partition(mu), parse_rational(alpha), n)
        self.spec = spec
        self.alpha = float(spec.alpha)
        self.r = spec.r
        self.s = spec.s
        Q = cofactors(spec.lam, spec.mu, spec.alpha)
        self.Q = [np.array([float(c) for c in reversed(q.coeffs)] or [0.0]) for q in Q]
        self.dQ = [np.array([float(c) for c in reversed(q.derivative().coeffs)] or [0.0]) for q in Q]

    def _terms(self, z: np.ndarray):
        F, L = [], []
        for i in range(self.r + 2):
            m, lg = _laguerre_scaled(self.s - i, self.alpha + i, z)
            F.append(m)
            L.append(lg)
        common = np.max(np.array(L), axis=0)
        F = [f * np.exp(lg - common) for f, lg in zip(F, L)]
        return F, common

    def value_and_derivative(self, z: np.ndarray):
        """(p, p', logscale) with the true values equal to p*exp(logscale), p'*exp(logscale)."""
        z = np.asarray(z, dtype=complex)
        F, common = self._terms(z)
        p = np.zeros(z.shape, dtype=complex)
        dp = np.zeros(z.shape, dtype=complex)
        for i in range(self.r + 1):
            sgn = -1.0 if i % 2 else 1.0
            q = np.polyval(self.Q[i], z)
            dq = np.polyval(self.dQ[i], z)
            p += sgn * q * F[i]
            dp += sgn * (dq * F[i] - q * F[i + 1])
        return p, dp, common

    def log_value(self, z: np.ndarray):
        """(mantissa, logscale) of xlp(z)."""
        p, _, common = self.value_and_derivative(z)
        return p, common


def _aberth_numpy(ev: XlpEvaluator, z0: np.ndarray, tol: float = 1e-14, maxiter: int = 300) -> tuple[np.ndarray, bool]:
    z = z0.astype(complex).copy()
    n = len(z)
    active = np.ones(n, dtype=bool)
    prev = np.full(n, np.inf)
    for _ in range(maxiter):
        idx = np.nonzero(active)[0]
        if len(idx) == 0:
            return z, True
        p, dp, _ = ev.value_and_derivative(z[idx])
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = p / dp
            diff = z[idx][:, None] - z[None, :]
            diff[np.arange(len(idx)), idx] = np.inf
            s = np.sum(1.0 / diff, axis=1)
            w = ratio / (1.0 - ratio * s)
        w = np.where(np.isfinite(w), w, 0.0)
        z[idx] = z[idx] - w
        step = np.abs(w)
        scale = np.maximum(np.abs(z[idx]), 1e-300)
        small = step <= tol * scale
        # rounding-noise floor: tiny steps that stopped shrinking
        stalled = (step <= STALL_TOL * scale) & (step >= 0.5 * prev[idx])
        prev[idx] = step
        active[idx[small | stalled | (p == 0)]] = False
    return z, not np.any(active)


def laguerre_nodes(k: int, beta: float) -> np.ndarray:
    """Zeros of L_k^{(beta)} as eigenvalues of the Jacobi matrix."""
    j = np.arange(k, dtype=float)
    diag = 2 * j + beta + 1
    off = np.sqrt((j[1:]) * (j[1:] + beta))
    return eigvalsh_tridiagonal(diag, off)


def xlp_zeros_float(lam: PartitionLike, mu: PartitionLike, alpha, n: int, omega_roots: Optional[Iterable[complex]] = None) -> ZeroSet:
    """Zeros of a large-degree xlp in double precision.

    Starting points are the Gauss-Laguerre nodes for parameter alpha+r of the
    appropriate count plus the zeros of Omega, all nudged off the real axis.
    """
    ev = XlpEvaluator(lam, mu, alpha, n)
    beta = float(ev.spec.alpha) + ev.r
    if omega_roots is None:
        om = omega(ev.spec.lam, ev.spec.mu, ev.spec.alpha)
        omega_roots = roots(om, 128).points() if om.degree >= 1 else []
    omega_roots = list(omega_roots)
    m = len(omega_roots)
    k = max(n - m, 0)
    starts = []
    if k:
        starts.extend(complex(x) for x in laguerre_nodes(k, max(beta, -0.99)))
    starts.extend(omega_roots[: n - k])
    starts = np.array(starts[:n], dtype=complex)
    jitter = np.exp(1j * (np.arange(n) + 0.5))
    starts = starts + (1e-3 * (1 + np.abs(starts))) * jitter
    z, ok = _aberth_numpy(ev, starts)
    if not ok:
        raise InsufficientPrecision(f"double-precision Aberth did not converge for n={n}")
    z = _pair_conjugates(_snap_real(z))
    zs = [Zero(complex(v), 1, classify_point(complex(v))) for v in z]
    zs.sort(key=lambda q: _sort_key(q.point))
    return ZeroSet(zs, n, 53)


def _snap_real(z: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    """Put near-real roots without a conjugate partner exactly on the axis."""
    z = z.copy()
    for i, v in enumerate(z):
        if v.imag != 0 and abs(v.imag) <= tol * (1 + abs(v)):
            partner = np.abs(z - np.conj(v))
            partner[i] = np.inf
            if np.min(partner) > 4 * abs(v.imag):
                z[i] = complex(v.real, 0.0)
    return z


def _pair_conjugates(z: np.ndarray) -> np.ndarray:
    """Average each upper-half-plane root with its nearest lower-half-plane partner."""
    z = z.copy()
    upper = [i for i in range(len(z)) if z[i].imag > 0]
    lower = set(i for i in range(len(z)) if z[i].imag < 0)
    for i in upper:
        if not lower:
            break
        j = min(lower, key=lambda k: abs(z[k] - np.conj(z[i])))
        if abs(z[j] - np.conj(z[i])) <= 1e-6 * (1 + abs(z[i])):
            m = 0.5 * (z[i] + np.conj(z[j]))
            z[i], z[j] = m, np.conj(m)
            lower.discard(j)
    return z


# --------------------------------------------------------------------------- front doors


def xlp_zeros(lam: PartitionLike, mu: PartitionLike, alpha, n: int, precision: Optional[int] = None, method: str = "auto") -> ZeroSet:
    """Zeros of L^{(alpha)}_{lambda,mu,n}: exact multiprecision for moderate n, double precision above."""
    if method == "auto":
        method = "exact" if n <= 60 else "float"
    if method == "exact":
        return roots(xlp(lam, mu, alpha, n), precision)
    if method == "float":
        return xlp_zeros_float(lam, mu, alpha, n)
    raise ValueError(f"unknown zero method {method!r}")


def omega_zeros(lam: PartitionLike, mu: PartitionLike, alpha, precision: Optional[int] = None) -> ZeroSet:
    p = omega(lam, mu, alpha)
    if p.degree < 1:
        return ZeroSet([], 0)
    return roots(p, precision)


def smallest_regular_zeros(lam: PartitionLike, mu: PartitionLike, alpha, n: int, k: int, xmax: Optional[float] = None) -> list[float]:
    """The k smallest positive zeros (sign changes on the real axis) via scaled evaluation and bisection."""
    ev = XlpEvaluator(lam, mu, alpha, n)
    beta = float(ev.spec.alpha) + ev.r
    js = bessel_zeros(max(beta, -0.99), k + 1)
    hi = xmax or (js[-1] ** 2 / (4 * n)) * 3 + 1e-9
    grid = np.linspace(0.0, hi, 4000 * (k + 1) + 1)[1:]
    vals, _ = ev.log_value(grid.astype(complex))
    sign = np.sign(vals.real)
    out = []
    for i in range(len(grid) - 1):
        if sign[i] == 0:
            out.append(float(grid[i]))
        elif sign[i] != sign[i + 1] and sign[i + 1] != 0:
            f = lambda x: float(ev.log_value(np.array([complex(x)]))[0][0].real)
            out.append(brentq(f, grid[i], grid[i + 1], xtol=1e-16 * grid[i + 1], rtol=1e-15))
        if len(out) >= k:
            break
    return out

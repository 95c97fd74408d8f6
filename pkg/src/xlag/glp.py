"""Generalized Laguerre polynomials Omega built from partition pairs and Maya diagrams."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Optional

from .exactalg import ExactPoly, QuasiPoly, ONE, format_rational, parse_rational, poly_det, vandermonde, wronskian
from .laguerre import laguerre
from .maya import MayaDiagram, canonical_shift, partition_of, shift
from .partition import Partition, PartitionLike, as_partition, conjugate, degrees


@dataclass(frozen=True)
class GlpSpec:
    lam: Partition = field(default_factory=Partition)
    mu: Partition = field(default_factory=Partition)
    alpha: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "lam", as_partition(self.lam))
        object.__setattr__(self, "mu", as_partition(self.mu))
        object.__setattr__(self, "alpha", parse_rational(self.alpha))

    def omega(self) -> ExactPoly:
        return omega(self.lam, self.mu, self.alpha)


# --------------------------------------------------------------------------- partition pairs


def laguerre_columns(lam: PartitionLike, mu: PartitionLike, alpha) -> list[QuasiPoly]:
    """The eigenfunctions L_{n_j}(x) and e^x L_{m_j}(-x) whose Wronskian defines Omega."""
    alpha = parse_rational(alpha)
    cols = [QuasiPoly.term(0, 0, laguerre(n, alpha)) for n in degrees(lam)]
    cols += [QuasiPoly.term(1, 0, laguerre(m, alpha).reflect()) for m in degrees(mu)]
    return cols


def omega_wronskian(lam: PartitionLike, mu: PartitionLike, alpha) -> ExactPoly:
    """Omega straight from its defining Wronskian with the e^{-r_2 x} prefactor."""
    lam, mu = as_partition(lam), as_partition(mu)
    cols = laguerre_columns(lam, mu, alpha)
    if not cols:
        return ONE
    w = wronskian(cols) * QuasiPoly.term(-mu.length, 0, ONE)
    return w.as_poly()


def glp_matrix(lam: PartitionLike, mu: PartitionLike, alpha, rows: Optional[list[int]] = None) -> list[list[ExactPoly]]:
    """Shifted-parameter matrix: row l holds (-1)^l L^{(a+l)}_{n_j-l}(x) and L^{(a+l)}_{m_j}(-x)."""
    return degree_matrix(degrees(lam), degrees(mu), alpha, rows)


def degree_matrix(ns: tuple, ms: tuple, alpha, rows: Optional[list[int]] = None) -> list[list[ExactPoly]]:
    """As :func:`glp_matrix`, from raw degree lists (which need not come from partitions)."""
    alpha = parse_rational(alpha)
    r = len(ns) + len(ms)
    rows = list(range(r)) if rows is None else rows
    mat = []
    for l in rows:
        sign = -1 if l % 2 else 1
        mat.append([laguerre(n - l, alpha + l).scale(sign) for n in ns]
                   + [laguerre(m, alpha + l).reflect() for m in ms])
    return mat


@lru_cache(maxsize=2048)
def _omega_det(lam: tuple, mu: tuple, alpha: Fraction) -> ExactPoly:
    ns, ms = degrees(lam), degrees(mu)
    if not ns and not ms:
        return ONE
    bound = sum(lam) + sum(ms)
    return poly_det(glp_matrix(lam, mu, alpha), degree_bound=bound)


def omega_via_det(lam: PartitionLike, mu: PartitionLike, alpha) -> ExactPoly:
    return _omega_det(as_partition(lam).parts, as_partition(mu).parts, parse_rational(alpha))


def omega(lam: PartitionLike, mu: PartitionLike, alpha) -> ExactPoly:
    """Omega^{(alpha)}_{lambda,mu}: degree |lambda|+|mu|, never identically zero."""
    return omega_via_det(lam, mu, alpha)


def predicted_degree(lam: PartitionLike, mu: PartitionLike) -> int:
    return as_partition(lam).weight + as_partition(mu).weight


def predicted_leading_coefficient(lam: PartitionLike, mu: PartitionLike) -> Fraction:
    ns, ms = degrees(lam), degrees(mu)
    num = (-1) ** sum(ns) * vandermonde(ns) * vandermonde(ms)
    den = 1
    for v in ns + ms:
        den *= factorial(v)
    return Fraction(num, den)


def duality_sign(lam: PartitionLike, mu: PartitionLike) -> int:
    r1, r2 = len(as_partition(lam)), len(as_partition(mu))
    return (-1) ** (r1 * (r1 - 1) // 2 + r2 * (r2 - 1) // 2)


def conjugation_data(lam: PartitionLike, mu: PartitionLike) -> tuple[int, int]:
    """(sign, t) with Omega^{a}_{l,m}(x) = sign * Omega^{-a-t}_{l',m'}(-x)."""
    lam, mu = as_partition(lam), as_partition(mu)
    r1, r2 = lam.length, mu.length
    t = lam.first + mu.first + r1 + r2
    e = mu.first * (mu.first - 1) // 2 + lam.weight + mu.weight + r2 * (r2 - 1) // 2
    return (-1) ** e, t


def origin_nonvanishing_guaranteed(lam: PartitionLike, mu: PartitionLike, alpha) -> bool:
    """Sufficient conditions for Omega(0) != 0 (it may be nonzero outside them too)."""
    alpha = parse_rational(alpha)
    ns, ms = degrees(lam), degrees(mu)
    top = max([0] + list(ns[:1]) + list(ms[:1]))
    if alpha.denominator == 1 and -top <= alpha <= -1:
        return False
    return all(alpha != -n - m - 1 for n in ns for m in ms)


# --------------------------------------------------------------------------- Maya diagrams


def maya_columns(M1: MayaDiagram, M2: MayaDiagram, alpha) -> list[QuasiPoly]:
    """The four eigenfunction families, in the order types 1, 2, 3, 4."""
    alpha = parse_rational(alpha)
    cols = [QuasiPoly.term(0, 0, laguerre(n, alpha)) for n in M1.right]
    cols += [QuasiPoly.term(1, 0, laguerre(m, alpha).reflect()) for m in M2.right]
    cols += [QuasiPoly.term(0, -alpha, laguerre(m, -alpha)) for m in M2.left]
    cols += [QuasiPoly.term(1, -alpha, laguerre(n, -alpha).reflect()) for n in M1.left]
    return cols


def omega_general(M1: MayaDiagram, M2: MayaDiagram, alpha) -> QuasiPoly:
    """e^{-(r_2+r_4)x} x^{(alpha+r_1+r_2)(r_3+r_4)} Wr[f_1, ..., f_r] as an exact quasi-polynomial."""
    alpha = parse_rational(alpha)
    cols = maya_columns(M1, M2, alpha)
    if not cols:
        return QuasiPoly.from_poly(ONE)
    r1, r2, r3, r4 = len(M1.right), len(M2.right), len(M2.left), len(M1.left)
    pre = QuasiPoly.term(-(r2 + r4), (alpha + r1 + r2) * (r3 + r4), ONE)
    return wronskian(cols) * pre


def alpha_admissible(M1: MayaDiagram, M2: MayaDiagram, alpha) -> bool:
    """True iff the two families share no proportional eigenfunctions (nonzero constant)."""
    alpha = parse_rational(alpha)
    bad = {Fraction(mp - n) for mp in M2.left for n in M1.right}
    bad |= {Fraction(np_ - m) for np_ in M1.left for m in M2.right}
    return alpha not in bad


@dataclass(frozen=True)
class ReductionResult:
    constant: Fraction
    sign_exponent: int
    d0: int
    d1: int
    d2: int
    shift: int
    t1: int
    t2: int
    lam: Partition
    mu: Partition
    alpha: Fraction
    iterated_constant: Optional[Fraction] = None
    steps: tuple = ()

    @property
    def target_alpha(self) -> Fraction:
        return self.alpha - self.shift

    def to_json(self) -> dict:
        return {
            "constant": format_rational(self.constant),
            "sign_exponent": self.sign_exponent,
            "d0": self.d0, "d1": self.d1, "d2": self.d2,
            "t1": self.t1, "t2": self.t2, "shift": self.shift,
            "lambda": list(self.lam.parts), "mu": list(self.mu.parts),
            "target_alpha": format_rational(self.target_alpha),
            "iterated_constant": None if self.iterated_constant is None else format_rational(self.iterated_constant),
            "steps": list(self.steps),
        }


def sign_exponents(M1: MayaDiagram, M2: MayaDiagram) -> tuple[int, int, int, int]:
    """(d, d0, d1, d2) for the closed-form reduction constant."""
    r1, r2, r3, r4 = len(M1.right), len(M2.right), len(M2.left), len(M1.left)
    t2 = canonical_shift(M2)
    d0 = abs(t2) * r2 - abs(t2) * (abs(t2) + 1) // 2
    d1 = d2 = 0
    if r4:
        k = M1.left[0] + 1 - r4
        ext = M1.extended_right(r1 + k)[r1:]
        d1 = r4 * (r4 - 1) // 2 + r1 * r4 + k * (M1.left[0] + 2 + r4) // 2 + sum(ext)
    if r3:
        k = M2.left[0] + 1 - r3
        ext = M2.extended_right(r2 + k)[r2:]
        d2 = r2 * (M2.left[0] + 1) + (M2.left[0] + 1) * k + sum(ext)
    if not r3 and not r4:
        d = d0
    elif not r3:
        d = d0 + d1
    elif not r4:
        d = d2
    else:
        d = d1 + d2
    return d, d0, d1, d2


def closed_form_constant(M1: MayaDiagram, M2: MayaDiagram, alpha) -> Fraction:
    alpha = parse_rational(alpha)
    d = sign_exponents(M1, M2)[0]
    c = Fraction((-1) ** d)
    for n in M1.right:
        for mp in M2.left:
            c *= mp - alpha - n
        for np_ in M1.left:
            c *= n + np_ + 1
    for m in M2.right:
        for np_ in M1.left:
            c *= np_ - alpha - m
        for mp in M2.left:
            c *= m + mp + 1
    return c


def _prod(values) -> Fraction:
    out = Fraction(1)
    for v in values:
        out *= v
    return out


def single_step_reduce(which: str, M1: MayaDiagram, M2: MayaDiagram, alpha):
    """One zero-removal step: Omega^{(a)}_{M1,M2} = factor * Omega^{(a')}_{M1',M2'}."""
    alpha = parse_rational(alpha)
    r1, r2, r4 = len(M1.right), len(M2.right), len(M1.left)
    ns, ms, mps, nps = M1.right, M2.right, M2.left, M1.left
    if which == "a":
        if not ns or ns[-1] != 0:
            raise ValueError("reduction (a) needs a filled box at position 0 of M1")
        f = _prod(mp - alpha for mp in mps) * _prod(np_ + 1 for np_ in nps)
        return f, shift(M1, -1), M2, alpha + 1
    if which == "b":
        if not nps or nps[-1] != 0:
            raise ValueError("reduction (b) needs an empty box at position -1 of M1")
        f = (-1) ** (r1 + r2 + r4 - 1) * _prod(n + 1 for n in ns) * _prod(m + alpha for m in ms)
        return Fraction(f), shift(M1, 1), M2, alpha - 1
    if which == "c":
        if not ms or ms[-1] != 0:
            raise ValueError("reduction (c) needs a filled box at position 0 of M2")
        f = (-1) ** (r2 - 1) * _prod(mp + 1 for mp in mps) * _prod(np_ - alpha for np_ in nps)
        return Fraction(f), M1, shift(M2, -1), alpha + 1
    if which == "d":
        if not mps or mps[-1] != 0:
            raise ValueError("reduction (d) needs an empty box at position -1 of M2")
        f = (-1) ** (r1 + r2) * _prod(n + alpha for n in ns) * _prod(m + 1 for m in ms)
        return Fraction(f), M1, shift(M2, 1), alpha - 1
    raise ValueError(f"unknown reduction {which!r}; expected one of a, b, c, d")


def _raise_step(which: str, M1: MayaDiagram, M2: MayaDiagram, alpha: Fraction):
    """Move one diagram up by one box, inverting (a)/(c) when the box at -1 is filled.

    Returns (factor, M1', M2', alpha', label) or None when the inverse step divides by zero.
    """
    M = M1 if which == "1" else M2
    if M.left and M.left[-1] == 0:
        step = "b" if which == "1" else "d"
        f, A, B, a = single_step_reduce(step, M1, M2, alpha)
        return f, A, B, a, step
    # box at -1 filled: apply (a)/(c) backwards from the raised diagram
    if which == "1":
        A, B = shift(M1, 1), M2
    else:
        A, B = M1, shift(M2, 1)
    g, _, _, _ = single_step_reduce("a" if which == "1" else "c", A, B, alpha - 1)
    if g == 0:
        return None
    return 1 / g, A, B, alpha - 1, ("a" if which == "1" else "c") + "^-1"


def reduce(M1: MayaDiagram, M2: MayaDiagram, alpha) -> ReductionResult:
    """Reduce Omega_{M1,M2} to C * Omega_{lambda,mu} at parameter alpha - t1 - t2.

    The constant is taken from the closed form; the iterated shifting process is run
    alongside and must agree whenever none of its intermediate divisors vanish.
    """
    alpha = parse_rational(alpha)
    t1, t2 = canonical_shift(M1), canonical_shift(M2)
    d, d0, d1, d2 = sign_exponents(M1, M2)
    C = closed_form_constant(M1, M2, alpha)

    acc: Optional[Fraction] = Fraction(1)
    A, B, a = M1, M2, alpha
    steps = []
    plan = [("2", t2), ("1", t1)] if t2 > 0 else [("1", t1), ("2", t2)]
    for which, t in plan:
        for _ in range(abs(t)):
            if acc is None:
                break
            if t > 0:
                res = _raise_step(which, A, B, a)
                if res is None:
                    acc = None
                    break
                f, A, B, a, label = res
            else:
                label = "a" if which == "1" else "c"
                f, A, B, a = single_step_reduce(label, A, B, a)
            acc *= f
            steps.append(label)
    if acc is not None and acc != C:
        raise AssertionError(f"iterated constant {acc} disagrees with closed form {C} for {M1}, {M2}, alpha={alpha}")
    return ReductionResult(
        constant=C, sign_exponent=d, d0=d0, d1=d1, d2=d2, shift=t1 + t2, t1=t1, t2=t2,
        lam=partition_of(M1), mu=partition_of(M2), alpha=alpha, iterated_constant=acc, steps=tuple(steps),
    )


def check_reduction(M1: MayaDiagram, M2: MayaDiagram, alpha) -> bool:
    """omega_general(M1, M2, alpha) == C * omega(lambda, mu, alpha - t) exactly."""
    res = reduce(M1, M2, alpha)
    lhs = omega_general(M1, M2, alpha)
    rhs = omega(res.lam, res.mu, res.target_alpha).scale(res.constant)
    if lhs.is_zero():
        return rhs.is_zero()
    return lhs.is_poly() and lhs.as_poly() == rhs


def conjugate_pair(lam: PartitionLike, mu: PartitionLike) -> tuple[Partition, Partition]:
    return conjugate(lam), conjugate(mu)

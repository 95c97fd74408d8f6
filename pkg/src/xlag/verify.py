"""Verification suites: exact identities and numerical asymptotic checks, with a pass/fail table."""
from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from .asymptotics import logder_identity_residual, orthogonality_quadrature
from .exactalg import ExactPoly, lcoeff_identity_check
from .glp import (
    check_reduction,
    closed_form_constant,
    conjugation_data,
    duality_sign,
    omega,
    omega_general,
    omega_wronskian,
    predicted_degree,
    predicted_leading_coefficient,
)
from .laguerre import moment_inner_product
from .maya import MayaDiagram
from .partition import Partition, admissible_degrees, conjugate, partition_pairs, partitions_of
from .xlp import laguerre_basis_expansion, window, xlp, xm_determinant, xm_partition_form
from .zeros import classify, omega_zeros, xlp_zeros

GLP1_ALPHAS = (Fraction(1), Fraction(5), Fraction(1, 3), Fraction(-7, 4))
MAYA_ALPHAS = (Fraction(1, 3), Fraction(-7, 4), Fraction(5, 2), Fraction(-10, 3), Fraction(13, 7))


@dataclass
class VerifyConfig:
    seed: int = 20240601
    glp1_max_weight: int = 10
    duality_pairs: int = 100
    duality_max_weight: int = 8
    maya_max_entry: int = 2
    maya_max_length: int = 6
    maya_alphas: tuple = MAYA_ALPHAS
    xm_max_m: int = 4
    lincom_specs: int = 50
    lincom_max_n: int = 60
    lcoeff_tuples: int = 500
    lcoeff_max_r: int = 6
    cross_specs: int = 30

    @classmethod
    def quick(cls) -> "VerifyConfig":
        return cls(glp1_max_weight=5, duality_pairs=20, duality_max_weight=5, maya_max_length=3,
                   maya_alphas=MAYA_ALPHAS[:2], xm_max_m=2, lincom_specs=8, lincom_max_n=25,
                   lcoeff_tuples=50, cross_specs=6)


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, msg: str):
        self.failures.append(msg)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"  first failure: {self.failures[0]}" if self.failures else ""
        return f"{status}  {self.name:<22} {self.checked:>6} checks  {self.seconds:7.2f}s{extra}"


# --------------------------------------------------------------------------- generators


def random_partition(rng: random.Random, max_weight: int) -> Partition:
    w = rng.randint(0, max_weight)
    return rng.choice(list(partitions_of(w)))


def random_pair(rng: random.Random, max_total: int) -> tuple[Partition, Partition]:
    total = rng.randint(0, max_total)
    a = rng.randint(0, total)
    return rng.choice(list(partitions_of(a))), rng.choice(list(partitions_of(total - a)))


def random_rational(rng: random.Random, span: int = 6, max_den: int = 7) -> Fraction:
    return Fraction(rng.randint(-span * max_den, span * max_den), rng.randint(1, max_den))


def maya_pairs(max_entry: int, max_length: int) -> Iterator[tuple[MayaDiagram, MayaDiagram]]:
    """All (M1, M2) whose four lists draw from {0..max_entry} with total length <= max_length."""
    subsets = [tuple(sorted(c, reverse=True))
               for k in range(max_entry + 2) for c in itertools.combinations(range(max_entry + 1), k)]
    for a, b, c, d in itertools.product(subsets, repeat=4):
        if len(a) + len(b) + len(c) + len(d) <= max_length:
            yield MayaDiagram(d, a), MayaDiagram(c, b)


def violating_alphas(M1: MayaDiagram, M2: MayaDiagram) -> list[Fraction]:
    """Integer parameters at which two eigenfunctions of the Wronskian become proportional."""
    bad = {Fraction(mp - n) for mp in M2.left for n in M1.right}
    bad |= {Fraction(np_ - m) for np_ in M1.left for m in M2.right}
    return sorted(bad)


# --------------------------------------------------------------------------- exact suites


COUNTEREXAMPLES = (
    (((3, 1), (), Fraction(5)), ExactPoly.from_roots([6, 6, 6, 14], Fraction(1, 8))),
    (((2, 2), (), Fraction(-2)), ExactPoly.monomial(4, Fraction(1, 12))),
    (((1,), (2,), Fraction(-7, 4)), ExactPoly.from_roots([Fraction(-3, 4)] * 3, Fraction(-1, 2))),
    (((3,), (3,), Fraction(-13, 4)), (ExactPoly((Fraction(15, 16), 0, 1)) ** 3).scale(Fraction(-1, 36))),
)


def suite_counterexamples(cfg: VerifyConfig, res: SuiteResult):
    for (lam, mu, a), expected in COUNTEREXAMPLES:
        res.checked += 1
        if omega(lam, mu, a) != expected:
            res.fail(f"omega({lam},{mu},{a}) differs from its closed form")


def suite_glp_leading(cfg: VerifyConfig, res: SuiteResult):
    pairs = list(partition_pairs(cfg.glp1_max_weight))
    for a in GLP1_ALPHAS:
        for lam, mu in pairs:
            res.checked += 1
            p = omega(lam, mu, a)
            if p.degree != predicted_degree(lam, mu) or p.lead != predicted_leading_coefficient(lam, mu):
                res.fail(f"λ={lam} μ={mu} α={a}: degree {p.degree}, lead {p.lead}")


def suite_duality_conjugation(cfg: VerifyConfig, res: SuiteResult):
    rng = random.Random(cfg.seed)
    for _ in range(cfg.duality_pairs):
        lam, mu = random_pair(rng, cfg.duality_max_weight)
        a = random_rational(rng)
        p = omega(lam, mu, a)
        res.checked += 2
        if p != omega(mu, lam, a).reflect().scale(duality_sign(lam, mu)):
            res.fail(f"duality λ={lam} μ={mu} α={a}")
        sign, t = conjugation_data(lam, mu)
        if p != omega(conjugate(lam), conjugate(mu), -a - t).reflect().scale(sign):
            res.fail(f"conjugation λ={lam} μ={mu} α={a}")


def suite_maya_reduction(cfg: VerifyConfig, res: SuiteResult):
    for M1, M2 in maya_pairs(cfg.maya_max_entry, cfg.maya_max_length):
        for a in cfg.maya_alphas:
            res.checked += 1
            if not check_reduction(M1, M2, a):
                res.fail(f"M1={M1} M2={M2} α={a}")
        for a in violating_alphas(M1, M2):
            res.checked += 1
            if closed_form_constant(M1, M2, a) != 0 or not omega_general(M1, M2, a).is_zero():
                res.fail(f"vanishing case M1={M1} M2={M2} α={a}")


def suite_xm_types(cfg: VerifyConfig, res: SuiteResult):
    for kind in ("I", "II", "III"):
        for m in range(cfg.xm_max_m + 1):
            lo = m + 1 if kind == "III" else m
            for n in range(lo, m + 7):
                for a in (Fraction(1, 2), Fraction(7, 3)):
                    res.checked += 1
                    if xm_determinant(kind, m, n, a) != xm_partition_form(kind, m, n, a):
                        res.fail(f"type {kind} m={m} n={n} α={a}")


def suite_lincom(cfg: VerifyConfig, res: SuiteResult):
    rng = random.Random(cfg.seed + 1)
    done = 0
    while done < cfg.lincom_specs:
        lam, mu = random_pair(rng, 5)
        r = len(lam) + len(mu)
        a = random_rational(rng, span=3)
        if a + r <= -1:
            continue
        t = window(lam, mu)
        options = list(itertools.takewhile(lambda n: n <= cfg.lincom_max_n, admissible_degrees(lam, mu)))
        # prefer degrees with a nonempty orthogonality window
        options = [n for n in options if n > t] or options
        if not options:
            continue
        n = rng.choice(options)
        done += 1
        res.checked += 1
        coeffs = laguerre_basis_expansion(lam, mu, a, n)
        if any(k < n - t or k > n for k in coeffs):
            res.fail(f"support outside [n-t, n]: λ={lam} μ={mu} α={a} n={n}")
        p = xlp(lam, mu, a, n)
        for k in range(max(n - t, 0)):
            if moment_inner_product(ExactPoly.monomial(k), p, a + r) != 0:
                res.fail(f"moment x^{k} nonzero: λ={lam} μ={mu} α={a} n={n}")
                break


def suite_lcoeff(cfg: VerifyConfig, res: SuiteResult):
    rng = random.Random(cfg.seed + 2)
    for _ in range(cfg.lcoeff_tuples):
        r = rng.randint(1, cfg.lcoeff_max_r)
        xs: list[Fraction] = []
        while len(xs) < r:
            q = random_rational(rng, span=10, max_den=9)
            if q not in xs:
                xs.append(q)
        lhs, rhs = lcoeff_identity_check(xs)
        res.checked += 1
        if lhs != rhs:
            res.fail(f"{xs}: {lhs} != {rhs}")


def suite_omega_cross(cfg: VerifyConfig, res: SuiteResult):
    rng = random.Random(cfg.seed + 3)
    for _ in range(cfg.cross_specs):
        lam, mu = random_pair(rng, 6)
        a = random_rational(rng)
        res.checked += 1
        if omega(lam, mu, a) != omega_wronskian(lam, mu, a):
            res.fail(f"determinant and Wronskian routes differ: λ={lam} μ={mu} α={a}")


EXACT_SUITES: dict[str, Callable[[VerifyConfig, SuiteResult], None]] = {
    "counterexamples": suite_counterexamples,
    "glp-leading": suite_glp_leading,
    "duality-conjugation": suite_duality_conjugation,
    "maya-reduction": suite_maya_reduction,
    "xm-types": suite_xm_types,
    "lincom-window": suite_lincom,
    "lcoeff-identity": suite_lcoeff,
    "omega-routes": suite_omega_cross,
}


# --------------------------------------------------------------------------- numerical suites


def suite_figure1(cfg: VerifyConfig, res: SuiteResult):
    g = omega_zeros((3, 2), (4, 2, 2), 1)
    x = xlp_zeros((3, 2), (4, 2, 2), 1, 25)
    res.checked += 3
    if len(g.points()) != 13:
        res.fail(f"{len(g.points())} GLP zeros")
    if classify(g)[0] != 1:
        res.fail(f"{classify(g)[0]} GLP zeros on the positive axis")
    if len(x.points()) != 25:
        res.fail(f"{len(x.points())} XLP zeros")


def suite_regular_count(cfg: VerifyConfig, res: SuiteResult):
    for lam, mu in [((2, 2), ()), ((1,), (2,)), ((3, 2), (4, 2, 2))]:
        for n in itertools.islice(admissible_degrees(lam, mu, 20), 0, None, 13):
            if n > 80:
                break
            t = window(lam, mu)
            N = classify(xlp_zeros(lam, mu, 1, n))[0]
            res.checked += 1
            if N < n - t:
                res.fail(f"N({n})={N} < {n - t} for λ={lam} μ={mu}")


def suite_logder(cfg: VerifyConfig, res: SuiteResult):
    for z in omega_zeros((2, 2), (), 1).zeros:
        res.checked += 1
        v = logder_identity_residual((2, 2), (), 1, 40, z.point)
        if not v <= 1e-8:
            res.fail(f"residual {v} at {z.point}")


def suite_orthogonality(cfg: VerifyConfig, res: SuiteResult):
    degs = list(itertools.takewhile(lambda n: n <= 6, admissible_degrees((), (2,))))
    for n, m in itertools.combinations(degs, 2):
        res.checked += 1
        v = orthogonality_quadrature((), (2,), Fraction(3, 2), n, m)
        if abs(v) > 1e-8:
            res.fail(f"<{n},{m}> = {v}")


NUMERIC_SUITES: dict[str, Callable[[VerifyConfig, SuiteResult], None]] = {
    "figure1-counts": suite_figure1,
    "regular-count-bound": suite_regular_count,
    "logder-identity": suite_logder,
    "orthogonality": suite_orthogonality,
}


def run_suites(which: str = "exact", cfg: VerifyConfig | None = None) -> list[SuiteResult]:
    cfg = cfg or VerifyConfig()
    if which == "exact":
        table = EXACT_SUITES
    elif which == "numeric":
        table = NUMERIC_SUITES
    elif which == "all":
        table = {**EXACT_SUITES, **NUMERIC_SUITES}
    elif which in EXACT_SUITES or which in NUMERIC_SUITES:
        table = {which: {**EXACT_SUITES, **NUMERIC_SUITES}[which]}
    else:
        raise ValueError(f"unknown suite {which!r}; expected exact, numeric, all or one of "
                         f"{', '.join(list(EXACT_SUITES) + list(NUMERIC_SUITES))}")
    out = []
    for name, fn in table.items():
        res = SuiteResult(name)
        t0 = time.perf_counter()
        fn(cfg, res)
        res.seconds = time.perf_counter() - t0
        out.append(res)
    return out


def format_table(results: list[SuiteResult]) -> str:
    lines = [r.line() for r in results]
    ok = all(r.passed for r in results)
    lines.append(f"{'ALL PASS' if ok else 'SOME FAILED'}: {sum(r.passed for r in results)}/{len(results)} suites")
    return "\n".join(lines)

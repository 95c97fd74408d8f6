import csv
import io
import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from xlag.exactalg import ExactPoly
from xlag.laguerre import laguerre
from xlag.partition import admissible_degrees
from xlag.xlp import xlp
from xlag.zeros import (
    InsufficientPrecision,
    Zero,
    ZeroSet,
    XlpEvaluator,
    aberth_mp,
    classify,
    classify_point,
    laguerre_nodes,
    omega_zeros,
    roots,
    smallest_regular_zeros,
    xlp_zeros,
)

F = Fraction
X = ExactPoly.x()


def as_multiset(zs: ZeroSet, digits: int = 9):
    return sorted((round(z.point.real, digits), round(z.point.imag, digits), z.multiplicity) for z in zs.zeros)


def test_root_examples():
    zs = roots(ExactPoly.from_roots([6, 6, 6, 14], F(1, 8)))
    assert as_multiset(zs) == [(6.0, 0.0, 3), (14.0, 0.0, 1)]
    zs = roots(ExactPoly.monomial(4, F(1, 12)))
    assert as_multiset(zs) == [(0.0, 0.0, 4)]
    assert zs.zeros[0].kind == "exceptional"
    zs = roots((X * X + F(15, 16)) ** 3 * ExactPoly.monomial(0, F(-1, 36)))
    b = round(math.sqrt(15) / 4, 9)
    assert as_multiset(zs) == [(0.0, -b, 3), (0.0, b, 3)]


def test_zero_polynomial_rejected():
    with pytest.raises(ValueError):
        roots(ExactPoly())


@settings(max_examples=40)
@given(st.lists(st.tuples(st.integers(-6, 6), st.integers(0, 4), st.integers(1, 3)), min_size=1, max_size=4,
                unique_by=lambda t: (t[0], t[1])))
def test_recovers_gaussian_integer_roots(spec):
    """Real polynomial with roots a +- bi (integers) and known multiplicities."""
    p = ExactPoly.from_roots([])
    expected = {}
    for a, b, m in spec:
        if b == 0:
            factor = X - a
            expected[(a, 0)] = expected.get((a, 0), 0) + m
        else:
            factor = X * X - ExactPoly.monomial(1, 2 * a) + ExactPoly.monomial(0, a * a + b * b)
            expected[(a, b)] = expected.get((a, b), 0) + m
            expected[(a, -b)] = expected.get((a, -b), 0) + m
        p = p * factor ** m
    zs = roots(p, 128)
    got = {(round(z.point.real), round(z.point.imag)): z.multiplicity for z in zs.zeros}
    assert got == expected
    assert sum(z.multiplicity for z in zs.zeros) == p.degree
    for z in zs.zeros:
        assert abs(z.point - complex(round(z.point.real), round(z.point.imag))) < 1e-20


@settings(max_examples=25)
@given(st.lists(st.fractions(-5, 5, max_denominator=9), min_size=2, max_size=12))
def test_conjugate_symmetry_and_residual(coeffs):
    p = ExactPoly(tuple(coeffs))
    if p.degree < 1:
        return
    zs = roots(p, 192)
    pts = zs.points()
    assert len(pts) == p.degree
    for z in pts:
        assert min(abs(w - z.conjugate()) for w in pts) <= 1e-12 * (1 + abs(z))
    assert zs.residual < 1e-40


def test_classify_point_rules():
    assert classify_point(2.0) == "regular"
    assert classify_point(complex(2.0, 1e-11)) == "regular"
    assert classify_point(complex(2.0, 1e-8)) == "exceptional"
    assert classify_point(0j) == "exceptional"
    assert classify_point(-1.0) == "exceptional"


def test_zeroset_invariant():
    with pytest.raises((AssertionError, ValueError)):
        ZeroSet([Zero(1 + 0j, 2, "regular")], 3)


@pytest.mark.parametrize("alpha", [F(0), F(-1, 2), F(7, 3)])
def test_classical_all_regular_and_simple(alpha):
    for n in (1, 5, 20, 40):
        N, reg, exc = classify(xlp_zeros((), (), alpha, n))
        assert N == n and not exc
        assert all(z.multiplicity == 1 for z in reg)


def test_figure_glp_has_one_positive_zero():
    zs = omega_zeros((3, 2), (4, 2, 2), 1)
    N, reg, exc = classify(zs)
    assert N == 1 and len(reg) == 1
    assert sum(z.multiplicity for z in exc) == 12


@pytest.mark.parametrize("lam, mu, alpha", [((3, 2), (4, 2, 2), 1), ((2, 2), (), 1), ((1,), (2,), F(1, 2)),
                                            ((2, 1), (1,), F(-1, 3))])
def test_regular_count_lower_bound(lam, mu, alpha):
    from xlag.partition import as_partition

    L, M = as_partition(lam), as_partition(mu)
    lo = 2 * (L.weight + M.weight) + M.length
    for n in _first(admissible_degrees(lam, mu, 0), 12):
        N, _, _ = classify(xlp_zeros(lam, mu, alpha, n))
        assert N >= n - lo


def _first(it, k):
    return [next(it) for _ in range(k)]


def test_exact_and_float_paths_agree():
    lam, mu, a, n = (2, 2), (), 1, 60
    ex = sorted(xlp_zeros(lam, mu, a, n, method="exact").points(), key=lambda z: (z.real, z.imag))
    fl = sorted(xlp_zeros(lam, mu, a, n, method="float").points(), key=lambda z: (z.real, z.imag))
    assert len(ex) == len(fl) == n
    assert max(abs(x - y) / (1 + abs(x)) for x, y in zip(ex, fl)) < 1e-10


def test_float_path_large_degree():
    zs = xlp_zeros((2, 2), (), 1, 400)
    N, reg, exc = classify(zs)
    assert len(zs.points()) == 400
    assert N >= 400 - 8
    assert len(exc) == 4


def test_unknown_method():
    with pytest.raises(ValueError, match="unknown zero method"):
        xlp_zeros((), (), 0, 5, method="magic")


@pytest.mark.parametrize("lam, mu, alpha, n", [((2, 1), (2,), F(3, 2), 30), ((2, 2), (), 1, 60), ((3, 2), (4, 2, 2), 1, 80)])
def test_evaluator_matches_exact_polynomial(lam, mu, alpha, n):
    p = xlp(lam, mu, alpha, n)
    ev = XlpEvaluator(lam, mu, alpha, n)
    z = np.array([0.3 + 0.1j, 2.5, 7.0 - 3.0j, 40.0, 90.0, -5 + 20j])
    vals, _, scale = ev.value_and_derivative(z)
    for zi, v, s in zip(z, vals, np.broadcast_to(scale, z.shape)):
        # the exact coefficients alternate and are huge, so evaluate them at high precision
        with mpmath.workdps(120):
            exact = complex(p.eval_mp(mpmath.mpc(zi)))
        assert v * math.exp(s) == pytest.approx(exact, rel=1e-12)


@pytest.mark.parametrize("k, beta", [(10, 0.0), (25, 2.5), (40, -0.5)])
def test_laguerre_nodes_match_exact_roots(k, beta):
    exact = sorted(z.real for z in roots(laguerre(k, F(beta).limit_denominator()), 128).points())
    assert np.allclose(laguerre_nodes(k, beta), exact, rtol=1e-11)


def test_smallest_regular_zeros():
    lam, mu, a, n = (2, 2), (), 1, 50
    reg = sorted(z.point.real for z in xlp_zeros(lam, mu, a, n).regular())
    got = smallest_regular_zeros(lam, mu, a, n, 3)
    assert got == pytest.approx(reg[:3], rel=1e-12)


def test_csv_format():
    zs = omega_zeros((3, 1), (), 5)
    text = zs.to_csv()
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["re", "im", "multiplicity", "class"]
    assert [r[2:] for r in rows[1:]] == [["3", "regular"], ["1", "regular"]]
    for r in rows[1:]:
        mantissa = r[0].split("e")[0].lstrip("-").replace(".", "")
        assert len(mantissa) == 17
    assert float(rows[1][0]) == 6.0 and float(rows[2][0]) == 14.0


def test_insufficient_precision_flag():
    coeffs = list(laguerre(40, 0).coeffs)
    with pytest.raises(InsufficientPrecision):
        aberth_mp(coeffs, 256, maxiter=1)
    assert len(aberth_mp(coeffs, 256)) == 40

import math
from fractions import Fraction

import mpmath
import pytest

from xlag.asymptotics import (
    Weight,
    exceptional_attraction,
    interlacing_count,
    logder_identity_residual,
    mehler_heine_probe,
    mehler_heine_target,
    mp_ks_distance,
    orthogonality_quadrature,
    regular_zero_scaling,
    simple_zero_scan,
)
from xlag.glp import omega
from xlag.special import bessel_zero
from xlag.zeros import omega_zeros

F = Fraction
MH_NS = (250, 500, 1000, 2000)


def test_weight():
    w = Weight.of((2, 2), (), 1)
    assert w.r == 2
    x = mpmath.mpf(3)
    om = omega((2, 2), (), 1)
    assert w(x) == pytest.approx(float(x ** 3 * mpmath.exp(-x) / om.eval_mp(x) ** 2))
    assert all(w(mpmath.mpf(t)) > 0 for t in (0.1, 1, 10, 50))


# --------------------------------------------------------------------------- Mehler-Heine


def test_mehler_heine_target_at_origin():
    lam, mu, a = (2, 2), (), F(1)
    assert mehler_heine_target(lam, mu, a, 0) == pytest.approx(float(omega(lam, mu, a)[0]) / math.gamma(4))


def test_mehler_heine_classical_baseline():
    for x in (0.5, 2.0):
        err = abs(mehler_heine_probe((), (), F(1, 2), 2000, x) - mehler_heine_target((), (), F(1, 2), x))
        assert err < 1e-3


@pytest.mark.parametrize("lam, mu, alpha", [((2, 2), (), 1), ((1,), (2,), F(1, 2)), ((3, 2), (4, 2, 2), 1)])
def test_mehler_heine_errors_shrink(lam, mu, alpha):
    for x in (1.0, 2.0 + 1.0j):
        t = mehler_heine_target(lam, mu, alpha, x)
        errs = [abs(mehler_heine_probe(lam, mu, alpha, n, x) - t) for n in MH_NS]
        assert all(b < a for a, b in zip(errs, errs[1:])), errs
        assert errs[-1] * 4 <= errs[0]


def test_mehler_heine_rejects_bad_degree():
    with pytest.raises(ValueError, match="degree sequence"):
        mehler_heine_probe((1,), (), 0, 1, 1.0)


def test_regular_zero_scaling_classical():
    for k in (1, 2):
        assert regular_zero_scaling((), (), 0, 2000, k) == pytest.approx(bessel_zero(0, k), abs=5e-3)


def test_regular_zero_scaling_converges():
    # nu = alpha + r = 1 + 2
    j = bessel_zero(3, 1)
    errs = [abs(regular_zero_scaling((2, 2), (), 1, n, 1) - j) for n in MH_NS]
    assert errs[-1] < 1e-2
    assert all(b < a for a, b in zip(errs, errs[1:])), errs


def test_regular_zero_scaling_errors():
    with pytest.raises(ValueError, match="Ω\\(0\\)"):
        regular_zero_scaling((2, 2), (), -2, 30, 1)
    with pytest.raises(ValueError, match="α\\+r"):
        regular_zero_scaling((), (), F(-3, 2), 30, 1)
    with pytest.raises(ValueError, match="fewer than"):
        regular_zero_scaling((), (), 0, 3, 5)


# --------------------------------------------------------------------------- Marchenko-Pastur


@pytest.mark.parametrize("lam, mu, alpha", [((), (), 0), ((2, 2), (), 1), ((3, 2), (4, 2, 2), 1)])
def test_ks_distance_decreases(lam, mu, alpha):
    d200, d800 = mp_ks_distance(lam, mu, alpha, 200), mp_ks_distance(lam, mu, alpha, 800)
    assert d800 < d200
    assert d800 < 0.02


def test_ks_distance_without_regular_zeros():
    assert mp_ks_distance((), (), 0, 0) == 1.0


def test_ks_requires_positive_shift():
    with pytest.raises(ValueError, match="α\\+r"):
        mp_ks_distance((), (1,), F(-5, 2), 10)


# --------------------------------------------------------------------------- exceptional zeros


def test_attraction_bounded():
    rep = exceptional_attraction((2, 2), (), 1, [100, 200, 400, 800])
    assert len(rep.records) == 4 * 4
    scaled = rep.scaled()
    assert max(scaled.values()) < 5
    assert scaled[800] <= scaled[200] * 1.05


def test_attraction_trivial_partitions():
    rep = exceptional_attraction((), (), 1, [10, 20])
    assert rep.records == [] and rep.notes == []


def test_attraction_figure_configuration():
    rep = exceptional_attraction((3, 2), (4, 2, 2), 1, [25])
    off_axis = [z for z in omega_zeros((3, 2), (4, 2, 2), 1).points() if not (z.imag == 0 and z.real > 0)]
    assert len(rep.records) == len(off_axis) == 12
    assert all(r["min_distance"] < 1 for r in rep.records)
    # the positive real GLP zero is not covered by the attraction bound and is only noted
    assert len(rep.notes) == 1 and "[0,∞)" in rep.notes[0]


def test_attraction_skips_multiple_zeros():
    rep = exceptional_attraction((1,), (2,), F(-7, 4), [10])
    assert rep.records == []
    assert any("multiplicity 3" in note for note in rep.notes)


def test_logder_identity():
    zs = omega_zeros((2, 2), (), 1).points()
    assert len(zs) == 4
    for z in zs:
        assert logder_identity_residual((2, 2), (), 1, 60, z) <= 1e-8


def test_logder_precision_scaling():
    z = omega_zeros((2, 2), (), 1).points()[0]
    lo = logder_identity_residual((2, 2), (), 1, 40, z, precision=128)
    hi = logder_identity_residual((2, 2), (), 1, 40, z, precision=256)
    assert hi < lo * 1e-20


def test_logder_rejects_nonsimple_zero():
    with pytest.raises(ValueError, match="not a simple zero"):
        logder_identity_residual((3, 1), (), 5, 10, 6.0)
    with pytest.raises(ValueError, match="not a zero"):
        logder_identity_residual((2, 2), (), 1, 10, 123.0)


# --------------------------------------------------------------------------- interlacing and orthogonality


def test_interlacing_examples():
    assert interlacing_count((), (), 1, 12) == 11
    assert interlacing_count((1,), (), 1, 30) >= 28
    assert interlacing_count((2, 2), (), 1, 100) >= 100 - 8


def test_interlacing_precondition():
    with pytest.raises(ValueError, match="n > 2"):
        interlacing_count((2, 2), (), 1, 8)


def test_orthogonality_examples():
    assert abs(orthogonality_quadrature((), (2,), F(3, 2), 2, 3)) <= 1e-8
    assert orthogonality_quadrature((), (2,), F(3, 2), 3, 3) == 1.0
    assert abs(orthogonality_quadrature((2, 2), (1,), F(1, 2), 7, 9)) <= 1e-8
    with pytest.raises(ValueError, match="even"):
        orthogonality_quadrature((1,), (), 1, 2, 3)
    with pytest.raises(ValueError, match="α > −1"):
        orthogonality_quadrature((), (), F(-3, 2), 2, 3)


def test_simple_zero_scan_counterexamples():
    rep = simple_zero_scan((3, 1), (), [5])
    assert [(round(z.real, 9), m) for z, m in rep[0]["nonsimple"]] == [(6.0, 3)]
    rep = simple_zero_scan((1,), (2,), [F(-7, 4)])
    assert [(round(z.real, 9), m) for z, m in rep[0]["nonsimple"]] == [(-0.75, 3)]
    rep = simple_zero_scan((2, 2), (), [-2])
    assert rep[0]["nonsimple"][0][1] == 4
    rep = simple_zero_scan((3,), (3,), [F(-13, 4)])
    assert sorted(m for _, m in rep[0]["nonsimple"]) == [3, 3]


def test_simple_zero_scan_under_hypotheses():
    for rec in simple_zero_scan((2, 2), (), [0, F(1, 2), 1, 2]):
        assert rec["nonsimple"] == []

"""Asymptotic sweeps over n, emitted as versioned JSON reports."""
from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .asymptotics import (
    AttractionReport,
    _require_degree,
    _require_positive_shift,
    _simple_offaxis_omega_zeros,
    exceptional_attraction,
    mehler_heine_probe,
    mehler_heine_target,
    normalized_regular_zeros,
    regular_zero_scaling,
)
from .exactalg import format_rational, parse_rational
from .glp import omega
from .partition import Partition, as_partition
from .special import bessel_zero, ks_distance, mp_cdf

SCHEMA = "xlag.sweep/1"
MODES = ("mehler-heine", "mp", "attraction")
DEFAULT_NS = {
    "mehler-heine": (250, 500, 1000, 2000),
    "mp": (200, 400, 800),
    "attraction": (100, 200, 400, 800),
}


@dataclass
class SweepConfig:
    mode: str
    lam: Partition = field(default_factory=Partition)
    mu: Partition = field(default_factory=Partition)
    alpha: Fraction = Fraction(0)
    ns: Sequence[int] = ()
    xs: Sequence[float] = (0.5, 1.0, 2.0)
    jobs: int = 1

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown sweep mode {self.mode!r}; expected one of {', '.join(MODES)}")
        self.lam, self.mu = as_partition(self.lam), as_partition(self.mu)
        self.alpha = parse_rational(self.alpha)
        self.ns = tuple(int(n) for n in (self.ns or DEFAULT_NS[self.mode]))
        self.xs = tuple(float(x) for x in self.xs)
        if self.jobs < 1:
            raise ValueError(f"--jobs must be at least 1, got {self.jobs}")


def _pair(z: complex) -> list[float]:
    return [z.real, z.imag]


def _mehler_heine_record(cfg: SweepConfig, n: int) -> dict:
    probes = []
    for x in cfg.xs:
        p = mehler_heine_probe(cfg.lam, cfg.mu, cfg.alpha, n, x)
        t = mehler_heine_target(cfg.lam, cfg.mu, cfg.alpha, x)
        probes.append({"x": x, "probe": _pair(p), "target": _pair(t), "error": abs(p - t)})
    rec = {"n": n, "probes": probes, "scaled_first_zero": None, "bessel_zero": None}
    nu = cfg.alpha + len(cfg.lam) + len(cfg.mu)
    if nu > -1 and omega(cfg.lam, cfg.mu, cfg.alpha)[0] != 0:
        rec["scaled_first_zero"] = regular_zero_scaling(cfg.lam, cfg.mu, cfg.alpha, n, 1)
        rec["bessel_zero"] = bessel_zero(float(nu), 1)
    return rec


def _mp_record(cfg: SweepConfig, n: int) -> dict:
    xs = normalized_regular_zeros(cfg.lam, cfg.mu, cfg.alpha, n)
    return {"n": n, "regular_count": len(xs), "ks_distance": ks_distance(xs, mp_cdf)}


def _attraction_records(cfg: SweepConfig, n: int) -> list[dict]:
    rep = exceptional_attraction(cfg.lam, cfg.mu, cfg.alpha, [n])
    return [{"n": r["n"], "omega_zero": [r["z_re"], r["z_im"]], "min_distance": r["min_distance"],
             "scaled": r["min_distance"] * math.sqrt(r["n"])} for r in rep.records]


def _task(args) -> list[dict]:
    cfg, n = args
    if cfg.mode == "mehler-heine":
        return [_mehler_heine_record(cfg, n)]
    if cfg.mode == "mp":
        return [_mp_record(cfg, n)]
    return _attraction_records(cfg, n)


def run_sweep(cfg: SweepConfig) -> dict:
    """Run the sweep; records are ordered by n regardless of the worker count."""
    for n in cfg.ns:
        _require_degree(cfg.lam, cfg.mu, n)
    if cfg.mode != "mehler-heine":
        _require_positive_shift(cfg.alpha, len(cfg.lam) + len(cfg.mu))
    tasks = [(cfg, n) for n in cfg.ns]
    if cfg.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=min(cfg.jobs, len(tasks))) as pool:
            chunks = list(pool.map(_task, tasks))
    else:
        chunks = [_task(t) for t in tasks]
    report = {
        "schema": SCHEMA,
        "mode": cfg.mode,
        "lambda": list(cfg.lam.parts),
        "mu": list(cfg.mu.parts),
        "alpha": format_rational(cfg.alpha),
        "records": [rec for chunk in chunks for rec in chunk],
    }
    if cfg.mode == "attraction":
        notes = AttractionReport()
        if cfg.lam.weight + cfg.mu.weight:
            _simple_offaxis_omega_zeros(cfg.lam, cfg.mu, cfg.alpha, notes)
        report["notes"] = notes.notes
    return report


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"

"""Run the three asymptotic sweeps for one (λ, μ, α) and write one JSON report per mode.

    python scripts/sweep_asymptotics.py --lambda 2,2 --alpha 1 --jobs 2 --outdir out/
"""
import argparse
from pathlib import Path

from xlag.exactalg import parse_rational
from xlag.partition import format_partition, parse_partition
from xlag.sweep import MODES, SweepConfig, dumps, run_sweep


def summarize(rep: dict) -> str:
    recs = rep["records"]
    if rep["mode"] == "mehler-heine":
        return ", ".join(f"n={r['n']}: max err {max(p['error'] for p in r['probes']):.2e}" for r in recs)
    if rep["mode"] == "mp":
        return ", ".join(f"n={r['n']}: KS {r['ks_distance']:.4f}" for r in recs)
    worst: dict[int, float] = {}
    for r in recs:
        worst[r["n"]] = max(worst.get(r["n"], 0.0), r["scaled"])
    return ", ".join(f"n={n}: max scaled {v:.3f}" for n, v in sorted(worst.items())) or "no simple off-axis zeros"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--lambda", dest="lam", default="2,2")
    ap.add_argument("--mu", default="")
    ap.add_argument("--alpha", default="1")
    ap.add_argument("--modes", default=",".join(MODES))
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--outdir", default=".")
    args = ap.parse_args()

    lam, mu, alpha = parse_partition(args.lam), parse_partition(args.mu), parse_rational(args.alpha)
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    tag = f"{format_partition(lam) or 'e'}_{format_partition(mu) or 'e'}_{args.alpha.replace('/', 'o')}"
    for mode in args.modes.split(","):
        rep = run_sweep(SweepConfig(mode, lam, mu, alpha, jobs=args.jobs))
        path = out / f"sweep_{mode}_{tag}.json"
        path.write_text(dumps(rep))
        print(f"{mode}: {summarize(rep)}  -> {path}")


if __name__ == "__main__":
    main()

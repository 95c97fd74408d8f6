"""Zeros of Ω and of the degree-25 exceptional polynomial for λ=(3,2), μ=(4,2,2), α=1.

Writes the two CSV files and prints each zero with its class and the distance to the
nearest zero of the other polynomial.

    python scripts/figure1.py --outdir out/
"""
import argparse
from pathlib import Path

from xlag.cli import FIGURE1
from xlag.zeros import classify, omega_zeros, xlp_zeros


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--outdir", default=".")
    ap.add_argument("--precision", type=int, default=256)
    args = ap.parse_args()

    lam, mu, alpha, n = FIGURE1["lam"], FIGURE1["mu"], FIGURE1["alpha"], FIGURE1["n"]
    g = omega_zeros(lam, mu, alpha, args.precision)
    x = xlp_zeros(lam, mu, alpha, n, args.precision)
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    (out / "figure1_glp_zeros.csv").write_text(g.to_csv())
    (out / "figure1_xlp_zeros.csv").write_text(x.to_csv())

    xs = x.points()
    print(f"Ω: {len(g.points())} zeros, {classify(g)[0]} on (0,∞)")
    for z in g.zeros:
        nearest = min(abs(z.point - w) for w in xs)
        print(f"  {z.point.real:+.6f} {z.point.imag:+.6f}i  x{z.multiplicity}  {z.kind:<11}  nearest xlp zero {nearest:.4f}")
    N, reg, exc = classify(x)
    print(f"xlp, n={n}: {len(xs)} zeros, {N} regular, {sum(z.multiplicity for z in exc)} exceptional")


if __name__ == "__main__":
    main()

"""Command-line entry point: ``xlag <command> [options]``."""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional

from .exactalg import ExactPoly, format_rational, parse_rational
from .partition import parse_partition

SCHEMA_GLP = "xlag.glp/1"
SCHEMA_XLP = "xlag.xlp/1"
SCHEMA_MAYA = "xlag.maya/1"
SCHEMA_ZEROS = "xlag.zeros/1"


def _dump(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _emit(text: str, output: Optional[str]):
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _poly_csv(p: ExactPoly) -> str:
    rows = ["degree,coefficient"] + [f"{k},{format_rational(c)}" for k, c in enumerate(p.coeffs)]
    return "\n".join(rows) + "\n"


def _precision(args) -> int:
    if args.precision is not None:
        return args.precision
    return int(os.environ.get("XLAG_PRECISION_BITS", "256"))


# --------------------------------------------------------------------------- commands


def cmd_glp(args) -> int:
    from .glp import omega, omega_general, reduce
    from .maya import parse_maya

    alpha = parse_rational(args.alpha)
    maya = [args.maya_left1, args.maya_right1, args.maya_left2, args.maya_right2]
    if any(v is not None for v in maya):
        M1 = parse_maya(args.maya_left1 or "", args.maya_right1 or "")
        M2 = parse_maya(args.maya_left2 or "", args.maya_right2 or "")
        res = reduce(M1, M2, alpha)
        q = omega_general(M1, M2, alpha)
        if not q.is_zero() and not q.is_poly():
            raise ValueError("Ω_{M1,M2} is not a polynomial at this α")
        p = q.as_poly() if not q.is_zero() else ExactPoly()
        doc = {"schema": SCHEMA_GLP, "maya": {"M1": str(M1), "M2": str(M2)}, "reduction": res.to_json(),
               "lambda": list(res.lam.parts), "mu": list(res.mu.parts)}
    else:
        lam, mu = parse_partition(args.lam), parse_partition(args.mu)
        p = omega(lam, mu, alpha)
        doc = {"schema": SCHEMA_GLP, "lambda": list(lam.parts), "mu": list(mu.parts)}
    doc.update({"alpha": format_rational(alpha), "degree": None if p.is_zero() else int(p.degree),
                "coefficients": p.to_json()})
    _emit(_dump(doc) if args.out == "json" else _poly_csv(p), args.output)
    return 0


def cmd_xlp(args) -> int:
    from .xlp import xlp

    lam, mu, alpha = parse_partition(args.lam), parse_partition(args.mu), parse_rational(args.alpha)
    p = xlp(lam, mu, alpha, args.n)
    doc = {"schema": SCHEMA_XLP, "lambda": list(lam.parts), "mu": list(mu.parts), "alpha": format_rational(alpha),
           "n": args.n, "degree": int(p.degree), "coefficients": p.to_json()}
    _emit(_dump(doc) if args.out == "json" else _poly_csv(p), args.output)
    return 0


def cmd_maya(args) -> int:
    from .maya import encodings, parse_maya, shift

    M = parse_maya(args.left, args.right)
    if args.shift:
        M = shift(M, args.shift)
    _emit(_dump({"schema": SCHEMA_MAYA, **encodings(M)}), args.output)
    return 0


def cmd_zeros(args) -> int:
    from .zeros import classify, omega_zeros, xlp_zeros

    lam, mu, alpha = parse_partition(args.lam), parse_partition(args.mu), parse_rational(args.alpha)
    prec = _precision(args)
    if args.target == "glp":
        zs = omega_zeros(lam, mu, alpha, prec)
    else:
        if args.n is None:
            raise ValueError("--n is required for --target xlp")
        zs = xlp_zeros(lam, mu, alpha, args.n, prec, method=args.method)
    if args.out == "csv":
        _emit(zs.to_csv(), args.output)
    else:
        N, _, _ = classify(zs)
        doc = {"schema": SCHEMA_ZEROS, "target": args.target, "lambda": list(lam.parts), "mu": list(mu.parts),
               "alpha": format_rational(alpha), "n": args.n, "degree": zs.degree, "regular_count": N,
               "zeros": [{"re": a, "im": b, "multiplicity": m, "class": k} for a, b, m, k in zs.rows()]}
        _emit(_dump(doc), args.output)
    return 0


def cmd_verify(args) -> int:
    from .verify import VerifyConfig, format_table, run_suites

    cfg = VerifyConfig.quick() if args.quick else VerifyConfig()
    results = run_suites(args.suite, cfg)
    print(format_table(results))
    return 0 if all(r.passed for r in results) else 1


def cmd_asymptotics(args) -> int:
    from .sweep import SweepConfig, dumps, run_sweep

    ns = [int(v) for v in args.n_list.split(",")] if args.n_list else ()
    xs = [float(v) for v in args.x_list.split(",")] if args.x_list else (0.5, 1.0, 2.0)
    cfg = SweepConfig(args.mode, parse_partition(args.lam), parse_partition(args.mu), parse_rational(args.alpha),
                      ns, xs, args.jobs)
    _emit(dumps(run_sweep(cfg)), args.output)
    return 0


FIGURE1 = {"lam": (3, 2), "mu": (4, 2, 2), "alpha": 1, "n": 25}


def cmd_figure1(args) -> int:
    from .zeros import omega_zeros, xlp_zeros

    prec = _precision(args)
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    g = omega_zeros(FIGURE1["lam"], FIGURE1["mu"], FIGURE1["alpha"], prec)
    x = xlp_zeros(FIGURE1["lam"], FIGURE1["mu"], FIGURE1["alpha"], FIGURE1["n"], prec)
    (outdir / "figure1_glp_zeros.csv").write_text(g.to_csv())
    (outdir / "figure1_xlp_zeros.csv").write_text(x.to_csv())
    print(f"wrote {len(g.rows())} GLP zeros and {len(x.rows())} XLP zeros to {outdir}")
    return 0


# --------------------------------------------------------------------------- parser


def _add_spec(p: argparse.ArgumentParser, with_n: bool = False):
    p.add_argument("--alpha", required=True, help="exact rational p/q")
    p.add_argument("--lambda", dest="lam", default="", help="partition, e.g. 3,1 (empty for ∅)")
    p.add_argument("--mu", default="", help="partition, e.g. 4,2,2 (empty for ∅)")
    if with_n:
        p.add_argument("--n", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="xlag", description="Generalized and exceptional Laguerre polynomials.")
    ap.add_argument("--precision", type=int, default=None, help="root-finding bits (default $XLAG_PRECISION_BITS or 256)")
    ap.add_argument("--jobs", type=int, default=1, help="maximum worker processes for sweeps")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("glp", help="coefficients of Ω")
    _add_spec(p)
    for name in ("maya-left1", "maya-right1", "maya-left2", "maya-right2"):
        p.add_argument(f"--{name}", default=None)
    p.add_argument("--out", choices=("json", "csv"), default="json")
    p.add_argument("--output", default=None, help="file path (stdout if omitted)")
    p.set_defaults(func=cmd_glp)

    p = sub.add_parser("xlp", help="coefficients of the exceptional polynomial")
    _add_spec(p, with_n=True)
    p.add_argument("--out", choices=("json", "csv"), default="json")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_xlp)

    p = sub.add_parser("maya", help="named encodings of a Maya diagram")
    p.add_argument("--left", default="")
    p.add_argument("--right", default="")
    p.add_argument("--shift", type=int, default=0)
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_maya)

    p = sub.add_parser("zeros", help="zeros with multiplicity and class")
    p.add_argument("--target", choices=("glp", "xlp"), default="xlp")
    p.add_argument("--alpha", required=True)
    p.add_argument("--lambda", dest="lam", default="")
    p.add_argument("--mu", default="")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--method", choices=("auto", "exact", "float"), default="auto")
    p.add_argument("--out", choices=("json", "csv"), default="csv")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_zeros)

    p = sub.add_parser("verify", help="run verification suites and print a pass/fail table")
    p.add_argument("--suite", default="exact", help="exact, numeric, all, or a single suite name")
    p.add_argument("--quick", action="store_true", help="reduced sizes")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("asymptotics", help="asymptotic sweep as a JSON report")
    p.add_argument("--mode", choices=("mehler-heine", "mp", "attraction"), required=True)
    _add_spec(p)
    p.add_argument("--n-list", default=None, help="comma-separated degrees")
    p.add_argument("--x-list", default=None, help="comma-separated probe points (mehler-heine)")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_asymptotics)

    p = sub.add_parser("figure1", help="zero CSVs for λ=(3,2), μ=(4,2,2), α=1, n=25")
    p.add_argument("--outdir", default=".")
    p.set_defaults(func=cmd_figure1)
    return ap


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        parser.error("--jobs must be at least 1")
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"xlag {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

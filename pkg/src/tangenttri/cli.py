"""Command line interface.

    tangenttri density  --model incircle --from 2 --to 20 --steps 10
    tangenttri cdf      --model naive --from 0 --to 10 --steps 11
    tangenttri median   --model incircle [--digits 25]
    tangenttri simulate {side,perimeter,acute,alpha} --n 100000 --seed 7 [--bins 50]
    tangenttri optimize {perimeter,two-sides}

Exit status: 0 success, 2 usage or validation error, 3 numerical failure.
Floats are written with 17 significant digits; CSV uses ``,`` and LF line endings.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Any, Iterable, Optional, Sequence

import numpy as np

from . import analytic, optimize, sampling
from .analytic import DensityModel, QuantileBracketError
from .geometry import ContactAngles, triangle_from_contacts
from .numerics import QuadratureError, QuadratureSpec

EXIT_USAGE = 2
EXIT_NUMERIC = 3
SEED_ENV = "TANGENTTRI_SEED"


class UsageError(ValueError):
    pass


def fmt_float(x: float) -> str:
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return "%.17g" % x


def to_json(obj: Any, indent: int = 2, _level: int = 0) -> str:
    """JSON with every float at 17 significant digits; non-finite floats become strings."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f'{pad}"{k}": {to_json(v, indent, _level + 1)}' for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [pad + to_json(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        return fmt_float(x) if math.isfinite(x) else f'"{fmt_float(x)}"'
    if isinstance(obj, str):
        return json.dumps(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def to_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(fmt_float(v) if isinstance(v, float) else str(v) for v in row))
    return "\n".join(lines) + "\n"


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _grid(args) -> np.ndarray:
    if args.steps < 2:
        raise UsageError("--steps must be at least 2")
    if not args.lo < args.hi:
        raise UsageError("--from must be smaller than --to")
    return np.linspace(args.lo, args.hi, args.steps)


def _spec(args) -> QuadratureSpec:
    if args.tol <= 0:
        raise UsageError("--tol must be positive")
    return QuadratureSpec(abs_tol=args.tol, rel_tol=args.tol)


def cmd_density(args) -> str:
    xs = _grid(args)
    rows = [(float(x), float(analytic.density(args.model, x))) for x in xs]
    if args.format == "json":
        return to_json({"model": args.model.value, "rows": [{"l": x, "density": d} for x, d in rows]}) + "\n"
    return to_csv(["l", "density"], rows)


def cmd_cdf(args) -> str:
    xs = _grid(args)
    spec = _spec(args)
    rows = [(float(x), analytic.cdf(args.model, float(x), spec)) for x in xs]
    if args.format == "json":
        return to_json({"model": args.model.value, "rows": [{"l": x, "cdf": c} for x, c in rows]}) + "\n"
    return to_csv(["l", "cdf"], rows)


def cmd_median(args) -> str:
    spec = _spec(args)
    med = analytic.median(args.model, spec)
    report = {
        "model": args.model.value,
        "median": med,
        "achieved_tol": abs(analytic.cdf(args.model, med, spec) - 0.5),
    }
    if args.digits:
        report["median_digits"] = analytic.median_high_precision(args.model, args.digits)
    if args.format == "csv":
        return to_csv(list(report), [list(report.values())])
    return to_json(report) + "\n"


def cmd_simulate(args) -> str:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    if args.bins < 1:
        raise UsageError("--bins must be >= 1")
    if args.shards < 1:
        raise UsageError("--shards must be >= 1")
    hist = None
    if args.kind == "acute":
        summary = sampling.estimate_acute_probability(args.n, args.seed, args.shards)
    elif args.kind == "alpha":
        summary, hist = sampling.estimate_alpha_mean(args.n, args.seed, args.shards, args.bins)
    elif args.kind == "side":
        summary, hist = sampling.simulate_side(args.n, args.seed, args.bins, args.shards, args.model)
    else:
        summary, hist = sampling.simulate_perimeter(args.n, args.seed, args.bins, args.shards)

    if args.hist:
        if hist is None:
            raise UsageError(f"simulate {args.kind} produces no histogram")
        _emit(to_csv(["bin_lo", "bin_hi", "count"], hist.rows()), args.hist)
    if args.format == "csv":
        if hist is None:
            raise UsageError(f"simulate {args.kind} produces no histogram; use --format json")
        return to_csv(["bin_lo", "bin_hi", "count"], hist.rows())
    report = {
        "kind": args.kind,
        "n": summary.n,
        "seed": args.seed,
        "shards": args.shards,
        "estimate": summary.estimate,
        "std_error": summary.std_error,
        "extra": summary.extra,
    }
    if args.kind == "side":
        report["model"] = args.model.value
    if hist is not None:
        report["histogram"] = [{"bin_lo": a, "bin_hi": b, "count": c} for a, b, c in hist.rows()]
    return to_json(report) + "\n"


def cmd_optimize(args) -> str:
    if args.problem == "perimeter":
        closed = optimize.min_perimeter()
        third = math.pi / 3.0
        tri_perimeter = triangle_from_contacts(ContactAngles(third, third)).perimeter
        report = {
            "problem": "perimeter",
            "closed": closed,
            "numeric": tri_perimeter,
            "abs_difference": abs(closed - tri_perimeter),
            "side_infimum": optimize.side_infimum(),
        }
    else:
        closed = optimize.two_side_min_closed()
        numeric = optimize.two_side_min_numeric(args.tol)

        def record(o: optimize.TwoSideOptimum) -> dict:
            return {
                "w_star": o.w_star,
                "sum_uv": o.sum_uv,
                "apex_angle_rad": o.apex_angle,
                "apex_angle_deg": o.apex_angle_deg,
                "cos_apex": o.cos_apex,
            }

        report = {
            "problem": "two-sides",
            "closed": record(closed),
            "numeric": dict(record(numeric), uv_difference=numeric.uv_difference),
            "abs_difference": {
                "w_star": abs(closed.w_star - numeric.w_star),
                "sum_uv": abs(closed.sum_uv - numeric.sum_uv),
                "apex_angle_rad": abs(closed.apex_angle - numeric.apex_angle),
            },
        }
    return to_json(report) + "\n"


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV}={raw!r} is not an integer")


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value <= sampling.MAX_SEED:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tangenttri", description=__doc__.split("\n")[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["csv", "json"], default=None)
    common.add_argument("--out", metavar="PATH", default=None)
    common.add_argument("--tol", type=float, default=1e-12)
    model_arg = dict(type=DensityModel, choices=list(DensityModel), default=DensityModel.INCIRCLE,
                     metavar="{single,naive,incircle}")

    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("density", "cdf"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--model", **model_arg)
        p.add_argument("--from", dest="lo", type=float, required=True)
        p.add_argument("--to", dest="hi", type=float, required=True)
        p.add_argument("--steps", type=int, default=100)
        p.set_defaults(func=cmd_density if name == "density" else cmd_cdf, default_format="csv")

    p = sub.add_parser("median", parents=[common])
    p.add_argument("--model", **model_arg)
    p.add_argument("--digits", type=int, default=0, help="extra extended-precision median digits")
    p.set_defaults(func=cmd_median, default_format="json")

    p = sub.add_parser("simulate", parents=[common])
    p.add_argument("kind", choices=["side", "perimeter", "acute", "alpha"])
    p.add_argument("--model", **model_arg)
    p.add_argument("--n", type=int, default=100_000)
    p.add_argument("--seed", type=_seed, default=None)
    p.add_argument("--bins", type=int, default=50)
    p.add_argument("--shards", type=int, default=1)
    p.add_argument("--hist", metavar="PATH", default=None, help="also write the histogram CSV here")
    p.set_defaults(func=cmd_simulate, default_format="json")

    p = sub.add_parser("optimize", parents=[common])
    p.add_argument("problem", choices=["perimeter", "two-sides"])
    p.set_defaults(func=cmd_optimize, default_format="json")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = args.default_format
    try:
        if getattr(args, "seed", 0) is None:
            args.seed = _default_seed()
        text = args.func(args)
    except (QuadratureError, QuantileBracketError) as exc:
        print(f"tangenttri: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ValueError as exc:
        print(f"tangenttri: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(text, args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())

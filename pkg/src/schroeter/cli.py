"""Command-line surface: construct, seed-from-curve, fit, verify, plot.

Exit codes: 0 ok, 1 input/validation, 2 degeneracy/ambiguity, 3 invariant
violation.  All data files carry rationals as strings; floats exist only in
the SVG renderer.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from fractions import Fraction

from . import serialize
from .engine import DEFAULT_MAX_GENERATIONS, DEFAULT_MAX_POINTS, run
from .errors import SchroeterError, SeedFormatError, ValidationError
from .cubic import fit_cubic_9
from .svgplot import render_svg
from .verify import SUITES, revalidate_points, run_suites
from .weierstrass import WeierstrassCurve, seed_from_curve

SEED_DIR_ENV = "SCHROETER_SEED_DIR"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _resolve_seed_path(path: str) -> str:
    if os.path.exists(path):
        return path
    seed_dir = os.environ.get(SEED_DIR_ENV)
    if seed_dir:
        candidate = os.path.join(seed_dir, path)
        if os.path.exists(candidate):
            return candidate
    raise SeedFormatError(f"seed file not found: {path}")


def _load_seed(path: str):
    return serialize.seed_from_json(serialize.load_json(_resolve_seed_path(path)))


def _write(path: str, text: str):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _parse_points_arg(text: str):
    points = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = [p.strip() for p in chunk.split(",")]
        if len(parts) not in (2, 3):
            raise ValidationError(f"bad point {chunk!r}: expected x,y or x,y,z")
        points.append(serialize.point_from_json(parts))
    return points


def cmd_construct(args) -> int:
    seed, curve = _load_seed(args.seed)
    started = time.perf_counter()
    state = run(
        seed,
        max_points=args.max_points,
        max_generations=args.max_generations,
        curve=curve.cubic if curve else None,
        scheduler_seed=args.scheduler_seed,
    )
    elapsed = (time.perf_counter() - started) * 1000
    print(
        f"pairs={len(state.pairs)} points={state.point_count} "
        f"closed={str(state.closed).lower()} generations={state.generations} "
        f"({elapsed:.1f} ms)"
    )
    if args.out:
        if args.format == "csv":
            _write(args.out, serialize.state_points_csv(state))
        else:
            _write(args.out, serialize.dumps(serialize.state_to_json(state)))
        print(f"wrote {args.out}")
    if args.svg:
        render_curve = state.curve if state.curve else (curve.cubic if curve else None)
        _write(args.svg, render_svg(state.pairs, render_curve, tangents=args.tangents))
        print(f"wrote {args.svg}")
    return 0


def cmd_seed_from_curve(args) -> int:
    curve = WeierstrassCurve(Fraction(args.a), Fraction(args.b))
    points = _parse_points_arg(args.points)
    if len(points) != 3:
        raise ValidationError(f"need exactly three points, got {len(points)}")
    seed = seed_from_curve(curve, *points)
    text = serialize.dumps(serialize.seed_to_json(seed, curve))
    if args.out:
        _write(args.out, text)
        print(f"wrote {args.out}")
    else:
        print(text, end="")
    return 0


def cmd_fit(args) -> int:
    data = serialize.load_json(args.points)
    if not isinstance(data, list):
        raise SeedFormatError("points file must be a JSON array of points")
    points = [serialize.point_from_json(p) for p in data]
    if len(points) != 9:
        raise ValidationError(f"need exactly 9 points, got {len(points)}")
    cubic = fit_cubic_9(points)
    print(" ".join(str(c) for c in cubic.coeffs))
    return 0


def cmd_verify(args) -> int:
    if args.report:
        data = serialize.load_json(args.report)
        pairs = [serialize.pair_from_json(p) for p in data.get("pairs", [])]
        cubics = [serialize.cubic_from_json(c) for c in data.get("curve_basis", [])]
        if not cubics and data.get("curve"):
            cubics = [serialize.cubic_from_json(data["curve"])]
        if not cubics:
            raise ValidationError("report carries no curve to check against")
        revalidate_points((p for pair in pairs for p in pair.points), cubics)
        print(f"report ok: {2 * len(pairs)} points on the recorded curve")
        return 0

    seed, curve = _load_seed(args.seed)
    if args.a is not None and args.b is not None:
        curve = WeierstrassCurve(Fraction(args.a), Fraction(args.b))
    state = run(seed, max_points=args.max_points, curve=curve.cubic if curve else None)
    report = run_suites(state, suites=args.suite, curve=curve)
    counts = report.counts()
    for result in report.results:
        if result.status == "fail" or args.verbose:
            print(f"[{result.status:>10}] {result.suite}: {result.name} {result.detail}")
    summary = " ".join(f"{k}={v}" for k, v in sorted(counts.items()))
    print(f"verify: {summary}")
    if args.out:
        _write(args.out, serialize.dumps(report.to_json()))
        print(f"wrote {args.out}")
    return 0 if report.ok else 1


def cmd_plot(args) -> int:
    data = serialize.load_json(args.report)
    pairs = [serialize.pair_from_json(p) for p in data.get("pairs", [])]
    cubic = serialize.cubic_from_json(data["curve"]) if data.get("curve") else None
    _write(args.out, render_svg(pairs, cubic, tangents=args.tangents))
    print(f"wrote {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="schroeter", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="run the pair construction from a seed file")
    p.add_argument("--seed", required=True, help=f"seed JSON (also looked up in ${SEED_DIR_ENV})")
    p.add_argument("--max-points", type=int, default=DEFAULT_MAX_POINTS)
    p.add_argument("--max-generations", type=int, default=DEFAULT_MAX_GENERATIONS)
    p.add_argument("--out", help="write the run report (JSON, or CSV with --format csv)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--svg", help="write an SVG rendering")
    p.add_argument("--tangents", action="store_true", help="draw tangent lines in the SVG")
    p.add_argument("--scheduler-seed", type=int, default=None,
                   help="shuffle the internal worklist (output is identical; testing knob)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("seed-from-curve", help="build a seed from three points on y^2=x^3+ax^2+bx")
    p.add_argument("--a", required=True, help="rational coefficient a")
    p.add_argument("--b", required=True, help="rational coefficient b")
    p.add_argument("--points", required=True, help='three points "x,y;x,y;x,y"')
    p.add_argument("--out", help="seed file to write (stdout otherwise)")
    p.set_defaults(func=cmd_seed_from_curve)

    p = sub.add_parser("fit", help="fit the unique cubic through 9 points")
    p.add_argument("--points", required=True, help="JSON array of 9 points")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("verify", help="re-run a construction and check the classical claims")
    p.add_argument("--seed", help="seed JSON to construct and verify")
    p.add_argument("--report", help="instead: re-check a construct output file")
    p.add_argument("--suite", action="append", default=None,
                   help=f"suite to run, repeatable; one of all, {', '.join(SUITES)}")
    p.add_argument("--a", default=None, help="rational a of a known Weierstrass model")
    p.add_argument("--b", default=None, help="rational b of a known Weierstrass model")
    p.add_argument("--max-points", type=int, default=128)
    p.add_argument("--out", help="write the verification report JSON")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("plot", help="render a construct report as SVG")
    p.add_argument("--report", required=True, help="construct output JSON")
    p.add_argument("--out", required=True, help="SVG file to write")
    p.add_argument("--tangents", action="store_true")
    p.set_defaults(func=cmd_plot)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "suite", None) is None and args.command == "verify":
        args.suite = ["all"]
    if args.command == "verify" and not args.report and not args.seed:
        print("error: verify needs --seed or --report", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except SchroeterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())

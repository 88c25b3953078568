"""Command-line front end: generate, inspect, descend, verify, render.

Exit codes: 0 success, 1 property failure, 2 usage or parse error, 3 internal
invariant violation (which would falsify the underlying theorem and must
never occur).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .battery import run_battery
from .geometry import GeometryError, area, mahler_volume, polar_dual
from .reduction import InvariantViolation, descend
from .serialize import dump_polygon, dump_trace, polygon_from_dict
from .svg import render_svg
from .zonogen import GenSpec, UnknownName, named_polygon, named_polygon_names, random_zonogon

EXIT_OK = 0
EXIT_PROPERTY = 1
EXIT_USAGE = 2
EXIT_INVARIANT = 3


def _load(path: str):
    with open(path) as fh:
        return polygon_from_dict(json.load(fh))


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_gen(args) -> int:
    if args.name is not None:
        P = named_polygon(args.name)
    else:
        P = random_zonogon(GenSpec(args.n, args.seed, args.coord_bound))
    _write(dump_polygon(P), args.out)
    return EXIT_OK


def cmd_volume(args) -> int:
    P = _load(args.polygon)
    a = area(P)
    d = area(polar_dual(P))
    m = mahler_volume(P)
    print(f"area        {a} ({float(a)})")
    print(f"dual area   {d} ({float(d)})")
    print(f"mahler      {m} ({float(m)})")
    return EXIT_OK


def cmd_descend(args) -> int:
    P = _load(args.polygon)
    trace = descend(P)
    _write(dump_trace(trace), args.trace_out)
    if args.svg_dir is not None:
        os.makedirs(args.svg_dir, exist_ok=True)
        for i, step in enumerate(trace.steps):
            path = os.path.join(args.svg_dir, f"step_{i:03d}.svg")
            _write(render_svg(step.polygon, step.dual), path)
        _write(render_svg(trace.final), os.path.join(args.svg_dir, "final.svg"))
    n_steps = len(trace.steps)
    print(f"descent: {n_steps} step{'s' if n_steps != 1 else ''}, "
          f"final Mahler volume {trace.final_mahler}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        P = _load(args.polygon)
    except GeometryError as exc:
        print(f"[FAIL] polygon validation: {exc}")
        return EXIT_PROPERTY
    results = run_battery(P, invariance_maps=args.maps)
    width = max(len(r.name) for r in results)
    failures = 0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        detail = f"  ({r.detail})" if r.detail else ""
        print(f"[{status}] {r.name:<{width}}{detail}")
        failures += not r.passed
    return EXIT_OK if failures == 0 else EXIT_PROPERTY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mahler2d",
        description="Exact polar duality, Mahler volumes, and descent for "
        "centrally symmetric polygons.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a polygon as JSON")
    gen.add_argument("--n", type=int, default=4, help="number of vertex pairs (>= 2)")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--coord-bound", type=int, default=9)
    gen.add_argument("--name", choices=named_polygon_names(),
                     help="emit a fixed named polygon instead of a random one")
    gen.add_argument("--out", default=None, help="output path (default stdout)")
    gen.set_defaults(func=cmd_gen)

    vol = sub.add_parser("volume", help="print area, dual area and Mahler volume")
    vol.add_argument("polygon", help="polygon JSON file")
    vol.set_defaults(func=cmd_volume)

    des = sub.add_parser("descend", help="run the descent and write its trace")
    des.add_argument("polygon", help="polygon JSON file")
    des.add_argument("trace_out", help="trace JSON output path ('-' for stdout)")
    des.add_argument("--svg-dir", default=None,
                     help="also render one SVG per step into this directory")
    des.set_defaults(func=cmd_descend)

    ver = sub.add_parser("verify", help="run the full property battery")
    ver.add_argument("polygon", help="polygon JSON file")
    ver.add_argument("--maps", type=int, default=20,
                     help="random linear maps for the invariance check")
    ver.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "gen":
        if args.name is None and args.n < 2:
            parser.error(f"--n must be at least 2, got {args.n}")
        if args.coord_bound < 1:
            parser.error("--coord-bound must be positive")

    try:
        return args.func(args)
    except InvariantViolation as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (GeometryError, UnknownName) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry point: ``gmedetect detect|sweep|threshold``."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .criteria import detect_gme
from .errors import GMEError
from .states import FAMILIES, FamilyParams, make_state
from .stateio import read_state
from .sweep import SweepGrid, find_threshold, rows_to_csv, run_sweep

EXIT_DETECTED, EXIT_NOT_DETECTED, EXIT_ERROR = 0, 1, 2


def _add_family_args(p: argparse.ArgumentParser, required: bool = False) -> None:
    p.add_argument("--family", choices=FAMILIES, required=required)
    p.add_argument("--x", type=float, default=0.0)
    p.add_argument("--y", type=float, default=0.0)
    p.add_argument("--d", type=int, default=None, help="subsystem dimension (default 3 for the qutrit family, else 2)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--components", type=int, default=10, help="mixture size for random_biseparable")


def _family_params(args) -> FamilyParams:
    d = args.d
    if d is None:
        d = 3 if args.family == "ghz_qutrit_isotropic" else 2
    return FamilyParams(args.family, x=args.x, y=args.y, d=d, seed=args.seed, components=args.components)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gmedetect",
        description="Detect genuine tripartite entanglement with averaged PPT and realignment norms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("detect", help="analyze one state")
    _add_family_args(p)
    p.add_argument("--input", type=Path, help="JSON state file (overrides --family)")
    p.add_argument("--json", action="store_true", help="print the report as JSON")
    p.add_argument("--output", type=Path, help="also write the JSON report here")

    p = sub.add_parser("sweep", help="evaluate a parameter grid and write CSV")
    _add_family_args(p, required=True)
    p.add_argument("--step", type=float, default=0.05, help="grid step for both axes")
    p.add_argument("--x-range", type=float, nargs=2, metavar=("START", "STOP"), default=(0.0, 1.0))
    p.add_argument("--y-range", type=float, nargs=2, metavar=("START", "STOP"), default=None,
                   help="second axis; defaults to [0, 1] for ghz_w_qubit_mixture, unused otherwise")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--output", type=Path, help="CSV path (default stdout)")

    p = sub.add_parser("threshold", help="bisect the detection boundary along one parameter")
    _add_family_args(p, required=True)
    p.add_argument("--axis", choices=("x", "y"), default="x")
    p.add_argument("--lo", type=float, default=0.0)
    p.add_argument("--hi", type=float, default=1.0)
    p.add_argument("--tol", type=float, default=1e-6)
    return parser


def cmd_detect(args) -> int:
    if args.input is not None:
        rho = read_state(args.input)
    elif args.family is not None:
        rho = make_state(_family_params(args))
    else:
        raise GMEError("detect needs --input FILE or --family NAME")
    report = detect_gme(rho)
    payload = json.dumps(report.to_dict(), indent=2)
    print(payload if args.json else report.render())
    if args.output is not None:
        args.output.write_text(payload + "\n")
    return EXIT_DETECTED if report.is_gme else EXIT_NOT_DETECTED


def cmd_sweep(args) -> int:
    params = _family_params(args)
    y_range = args.y_range
    if y_range is None and args.family == "ghz_w_qubit_mixture":
        y_range = (0.0, 1.0)
    grid = SweepGrid(
        family=args.family,
        x_range=(args.x_range[0], args.x_range[1], args.step),
        y_range=None if y_range is None else (y_range[0], y_range[1], args.step),
        d=params.d,
        seed=params.seed,
    )
    text = rows_to_csv(run_sweep(grid, jobs=args.jobs))
    if args.output is None:
        sys.stdout.write(text)
    else:
        args.output.write_text(text)
    return 0


def cmd_threshold(args) -> int:
    t = find_threshold(_family_params(args), args.axis, args.lo, args.hi, args.tol)
    print(f"{t:.9f}")
    return 0


COMMANDS = {"detect": cmd_detect, "sweep": cmd_sweep, "threshold": cmd_threshold}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (GMEError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

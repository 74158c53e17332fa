"""Command-line front end.

Four subcommands: `evolve` writes a trajectory table computed by both the
closed form and the general route, `esd` reports the decay classification
and death times, `figure` emits the preset curve tables, and `verify` runs
the randomized property suites.

All numbers are printed with 12 significant digits, rows end with LF, and
identical flags plus seed give byte-identical output.  Times are the
dimensionless tau unless `--gamma` supplies a decay rate, in which case
every time value is divided by it (column names stay the same).

Exit codes: 0 success, 1 verification failure, 2 usage or parameter error,
3 output I/O failure.
"""
from __future__ import annotations

import argparse
import contextlib
import enum
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from .channels import NoiseKind, NoiseSpec
from .dynamics import (
    FIGURE_PRESETS,
    Classification,
    Scenario,
    closed_form_trajectory,
    esd_time_analytic,
    esd_time_bisection,
    numeric_trajectory,
)
from .states import FamilyParams, Family, PureStateParams, XStateParams
from .verification import run_all

MAX_FAILURES_SHOWN = 5


class OutputFormat(enum.Enum):
    CSV = "csv"
    JSONL = "jsonl"


@dataclass(frozen=True)
class RunConfig:
    scenario: Scenario
    tau_max: float
    grid_points: int
    output_path: str | None
    format: OutputFormat

    def __post_init__(self) -> None:
        if self.tau_max <= 0.0:
            raise ValueError(f"tau-max must be positive, got {self.tau_max!r}")
        if self.grid_points < 2:
            raise ValueError(f"points must be at least 2, got {self.grid_points!r}")


def _fmt(x: float) -> str:
    return format(float(x), ".12g")


def _scenario_from_args(args: argparse.Namespace) -> Scenario:
    chosen = [bool(args.xstate), bool(args.pure), args.family is not None]
    if sum(chosen) != 1:
        raise ValueError("specify exactly one of --xstate, --pure, --family")
    gamma = getattr(args, "gamma", 1.0)
    noise = NoiseSpec(NoiseKind(args.noise), rate=gamma)

    if args.family is not None:
        if args.x is None:
            raise ValueError("--family requires --x")
        return Scenario(FamilyParams(Family(args.family), args.x), noise)

    for name in ("a", "b", "c", "d"):
        if getattr(args, name) is None:
            raise ValueError(f"--{'xstate' if args.xstate else 'pure'} requires --{name}")

    if args.pure:
        state = PureStateParams(args.a, args.b, args.c, args.d, args.f, args.g, args.h)
        return Scenario(state, noise)

    if args.zsq is not None and args.zmod is not None:
        raise ValueError("--zsq and --zmod are mutually exclusive")
    if args.zsq is not None:
        if args.zarg is not None:
            raise ValueError("--zarg applies to --zmod, not --zsq")
        if args.zsq < 0.0:
            raise ValueError(f"--zsq must be nonnegative, got {args.zsq!r}")
        z = complex(math.sqrt(args.zsq))
    elif args.zmod is not None:
        if args.zmod < 0.0:
            raise ValueError(f"--zmod must be nonnegative, got {args.zmod!r}")
        arg = args.zarg if args.zarg is not None else 0.0
        z = args.zmod * complex(math.cos(arg), math.sin(arg))
    else:
        raise ValueError("--xstate requires --zsq or --zmod")
    return Scenario(XStateParams(args.a, args.b, args.c, args.d, z), noise)


def _open_out(path: str | None):
    if path is None:
        return contextlib.nullcontext(sys.stdout)
    return open(path, "w", newline="")


def _trajectory_rows(scenario: Scenario, grid: np.ndarray) -> list[tuple[float, float, float, float]]:
    closed = closed_form_trajectory(scenario, grid)
    numeric = numeric_trajectory(scenario, grid)
    scale = scenario.noise.rate
    return [
        (t / scale, cc, cw, abs(cc - cw))
        for t, cc, cw in zip(grid, closed.c, numeric.c)
    ]


def _write_rows(stream, rows, fmt: OutputFormat, curve: str | None = None) -> None:
    if fmt is OutputFormat.CSV:
        if curve is not None:
            stream.write(f"# curve: {curve}\n")
        stream.write("tau,c_closed,c_wootters,abs_diff\n")
        for row in rows:
            stream.write(",".join(_fmt(v) for v in row) + "\n")
        return
    tag = f'"curve": "{curve}", ' if curve is not None else ""
    for t, cc, cw, diff in rows:
        stream.write(
            f'{{{tag}"tau": {_fmt(t)}, "c_closed": {_fmt(cc)}, '
            f'"c_wootters": {_fmt(cw)}, "abs_diff": {_fmt(diff)}}}\n'
        )


def cmd_evolve(cfg: RunConfig) -> int:
    grid = np.linspace(0.0, cfg.tau_max, cfg.grid_points)
    rows = _trajectory_rows(cfg.scenario, grid)
    with _open_out(cfg.output_path) as stream:
        _write_rows(stream, rows, cfg.format)
    return 0


def cmd_esd(args: argparse.Namespace) -> int:
    scenario = _scenario_from_args(args)
    try:
        analytic = esd_time_analytic(scenario)
    except ValueError:
        analytic = None
    numeric = esd_time_bisection(scenario, tau_max=args.tau_max, points=args.points)
    scale = scenario.noise.rate

    pairs: list[tuple[str, str]] = [("classification", numeric.classification.value)]
    a_tau = analytic.tau_death if analytic is not None else None
    if analytic is None:
        pairs.append(("tau_death_analytic", "n/a (no closed-form threshold)"))
    elif a_tau is not None:
        pairs.append(("tau_death_analytic", _fmt(a_tau / scale)))
    if numeric.tau_death is not None:
        pairs.append(("tau_death_bisection", _fmt(numeric.tau_death / scale)))
        if a_tau is not None:
            pairs.append(("abs_diff", _fmt(abs(a_tau - numeric.tau_death) / scale)))
    if numeric.classification is Classification.ASYMPTOTIC_DECAY:
        pairs.append(("horizon", _fmt(numeric.horizon / scale)))

    with _open_out(args.out) as stream:
        if OutputFormat(args.format) is OutputFormat.JSONL:
            body = ", ".join(
                f'"{k}": {v}' if k.startswith(("tau", "abs", "horizon")) and "n/a" not in v
                else f'"{k}": "{v}"'
                for k, v in pairs
            )
            stream.write("{" + body + "}\n")
        else:
            for key, value in pairs:
                stream.write(f"{key}: {value}\n")
    return 0


def cmd_figure(args: argparse.Namespace) -> int:
    preset = FIGURE_PRESETS[args.name]
    fmt = OutputFormat(args.format)
    grid = np.linspace(0.0, preset.tau_max, args.points)
    ext = "csv" if fmt is OutputFormat.CSV else "jsonl"
    if args.out is not None:
        os.makedirs(args.out, exist_ok=True)
    for curve in preset.curves:
        rows = _trajectory_rows(curve.scenario, grid)
        if args.out is None:
            _write_rows(sys.stdout, rows, fmt, curve=curve.label)
        else:
            path = os.path.join(args.out, f"{preset.name}_{curve.label}.{ext}")
            with open(path, "w", newline="") as stream:
                _write_rows(stream, rows, fmt, curve=curve.label)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    results = run_all(args.seed, args.cases)
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        print(
            f"suite {res.name}: {status} cases={res.cases} "
            f"max_error={_fmt(res.max_error)} tol={_fmt(res.tolerance)}"
        )
        for failure in res.failures[:MAX_FAILURES_SHOWN]:
            print(f"  {failure}")
        if len(res.failures) > MAX_FAILURES_SHOWN:
            print(f"  ... {len(res.failures) - MAX_FAILURES_SHOWN} more failing cases")
    passed = sum(1 for r in results if r.passed)
    print(f"{passed}/{len(results)} suites passed")
    return 0 if passed == len(results) else 1


def _add_scenario_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--noise", choices=[k.value for k in NoiseKind], required=True)
    p.add_argument("--xstate", action="store_true", help="cross-pattern state from --a..--d and z flags")
    p.add_argument("--pure", action="store_true", help="pure state from --a..--d and --f --g --h")
    p.add_argument("--family", choices=[f.value for f in Family])
    for name in ("a", "b", "c", "d"):
        p.add_argument(f"--{name}", type=float)
    for name in ("f", "g", "h"):
        p.add_argument(f"--{name}", type=float, default=0.0)
    p.add_argument("--x", type=float, help="family mixing weight")
    p.add_argument("--zsq", type=float, help="|z|^2 (as in the curve presets)")
    p.add_argument("--zmod", type=float, help="|z|")
    p.add_argument("--zarg", type=float, help="arg(z), radians; with --zmod")
    p.add_argument("--gamma", type=float, default=1.0, help="decay rate; output times become tau/gamma")


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tau-max", dest="tau_max", type=float, default=50.0)
    p.add_argument("--points", type=int, default=2048)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=[f.value for f in OutputFormat], default="csv")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="esdsim",
        description="Two-qubit entanglement decay under one local noise channel",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_evolve = sub.add_parser("evolve", help="trajectory table, closed form vs general route")
    _add_scenario_flags(p_evolve)
    _add_output_flags(p_evolve)

    p_esd = sub.add_parser("esd", help="decay classification and death time")
    _add_scenario_flags(p_esd)
    _add_output_flags(p_esd)

    p_fig = sub.add_parser("figure", help="preset curve tables")
    p_fig.add_argument("name", choices=sorted(FIGURE_PRESETS))
    _add_output_flags(p_fig)

    p_verify = sub.add_parser("verify", help="run the randomized property suites")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--cases", type=int, default=1000)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        if args.command == "evolve":
            cfg = RunConfig(
                scenario=_scenario_from_args(args),
                tau_max=args.tau_max,
                grid_points=args.points,
                output_path=args.out,
                format=OutputFormat(args.format),
            )
            return cmd_evolve(cfg)
        if args.command == "esd":
            if args.points < 2:
                raise ValueError(f"points must be at least 2, got {args.points!r}")
            return cmd_esd(args)
        if args.command == "figure":
            if args.points < 2:
                raise ValueError(f"points must be at least 2, got {args.points!r}")
            return cmd_figure(args)
        return cmd_verify(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

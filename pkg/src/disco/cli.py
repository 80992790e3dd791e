"""Command line front end: ``disco <command> [options]``.

Commands: classify, sweep, limitset, coverage, veech, dump-map.  A
``--config`` file of ``key=value`` lines supplies values for any option not
given on the command line.  Exit status is 0 on success, 1 on usage errors
and 2 on I/O errors (``veech`` exits 3 when a check fails).
"""
from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import rauzy, schottky
from .aiet import family_member, omega_limit_estimate
from .classify import Caps, classify_direction, classify_parameter_t, slope_of_parameter
from .exactnum import format_rational, parse_proj, parse_rational
from .surface import first_return_direction


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _proj(text: str):
    try:
        return parse_proj(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a slope: {text!r}") from exc


# option name -> (converter, builtin default); None default means required
OPTIONS = {
    "slope": (_proj, None),
    "t": (_rational, None),
    "reduce_depth": (int, schottky.DEFAULT_DEPTH_CAP),
    "induction_steps": (int, rauzy.DEFAULT_MAX_STEPS),
    "t_min": (_rational, Fraction(11, 100)),
    "t_max": (_rational, Fraction(13, 100)),
    "steps": (int, 200),
    "burn_in": (int, 10_000),
    "samples": (int, 1_000),
    "seed": (int, 1),
    "format": (str, "csv"),
    "workers": (int, 1),
    "depth": (int, 3),
    "k": (int, 8),
    "output": (str, "-"),
}


def read_config(path: str) -> dict[str, str]:
    out = {}
    for n, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{n}: expected key=value")
        key, value = (part.strip() for part in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in OPTIONS:
            raise UsageError(f"{path}:{n}: unknown key {key!r}")
        out[key] = value
    return out


def _resolve(args, config: dict[str, str], keys) -> None:
    """Fill options left unset on the command line from config, then defaults."""
    for key in keys:
        if getattr(args, key, None) is not None:
            continue
        conv, default = OPTIONS[key]
        if key in config:
            try:
                setattr(args, key, conv(config[key]))
            except (ValueError, argparse.ArgumentTypeError) as exc:
                raise UsageError(f"config value for {key}: {exc}") from exc
        else:
            setattr(args, key, default)


def _add(p, *keys):
    for key in keys:
        conv = OPTIONS[key][0]
        flag = "--" + key.replace("_", "-")
        p.add_argument(flag, dest=key, type=conv, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="disco", description=__doc__.splitlines()[0])
    parser.add_argument("--config", help="file of key=value defaults")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="classify one direction or parameter")
    _add(p, "slope", "t", "reduce_depth", "induction_steps")

    p = sub.add_parser("sweep", help="omega-limit samples over a grid of t")
    _add(p, "t_min", "t_max", "steps", "burn_in", "samples", "seed", "format",
         "workers", "output")

    p = sub.add_parser("limitset", help="ping-pong arcs of a given depth")
    _add(p, "depth", "output")

    p = sub.add_parser("coverage", help="measure of the stopping set up to word length k")
    _add(p, "k", "output")

    sub.add_parser("veech", help="self-checks of the Veech group matrices")

    p = sub.add_parser("dump-map", help="branch table of the map for a parameter")
    _add(p, "slope", "t", "output")
    return parser


COMMAND_KEYS = {
    "classify": ("slope", "t", "reduce_depth", "induction_steps"),
    "sweep": ("t_min", "t_max", "steps", "burn_in", "samples", "seed", "format",
              "workers", "output"),
    "limitset": ("depth", "output"),
    "coverage": ("k", "output"),
    "veech": (),
    "dump-map": ("slope", "t", "output"),
}


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _one_direction(args):
    if (args.slope is None) == (args.t is None):
        raise UsageError("give exactly one of --slope and --t")
    return args.slope if args.t is None else slope_of_parameter(args.t)


def cmd_classify(args) -> int:
    caps = Caps(args.reduce_depth, args.induction_steps)
    if (args.slope is None) == (args.t is None):
        raise UsageError("give exactly one of --slope and --t")
    if args.t is not None:
        result = classify_parameter_t(args.t, caps)
    else:
        result = classify_direction(args.slope, caps)
    print(result.to_json())
    return 0


@dataclass(frozen=True)
class SweepConfig:
    t_min: Fraction
    t_max: Fraction
    steps: int
    burn_in: int = 10_000
    samples: int = 1_000
    seed: int = 1
    output: str = "-"
    format: str = "csv"

    def __post_init__(self):
        if not self.t_min < self.t_max:
            raise ValueError("t_min must be below t_max")
        if self.steps < 1:
            raise ValueError("steps must be at least 1")
        if self.format not in ("csv", "svg"):
            raise ValueError("format is csv or svg")

    def grid(self) -> list[Fraction]:
        if self.steps == 1:
            return [self.t_min]
        h = (self.t_max - self.t_min) / (self.steps - 1)
        return [self.t_min + i * h for i in range(self.steps)]


def _sweep_point(job):
    t, seed_seq, burn_in, samples = job
    x0 = np.random.default_rng(seed_seq).random()
    return omega_limit_estimate(family_member(t), x0, burn_in, samples)


def run_sweep(cfg: SweepConfig, workers: int = 1) -> list[tuple[Fraction, list[float]]]:
    """Sorted omega-limit samples for each grid parameter.

    Every grid point draws its start from its own child of
    ``SeedSequence(seed)``, so results do not depend on ``workers``.
    """
    grid = cfg.grid()
    seeds = np.random.SeedSequence(cfg.seed).spawn(len(grid))
    jobs = [(t, s, cfg.burn_in, cfg.samples) for t, s in zip(grid, seeds)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_sweep_point, jobs, chunksize=4))
    else:
        results = [_sweep_point(j) for j in jobs]
    return list(zip(grid, results))


def sweep_csv(rows) -> str:
    lines = ["t,x"]
    for t, xs in rows:
        tt = repr(float(t))
        lines.extend(f"{tt},{x!r}" for x in xs)
    return "\n".join(lines) + "\n"


def sweep_svg(rows, t_min, t_max, width: int = 800, height: int = 600) -> str:
    """Scatter plot of the sweep, one dot per occupied pixel."""
    t_min, t_max = float(t_min), float(t_max)
    span = (t_max - t_min) or 1.0
    dots = set()
    for t, xs in rows:
        px = round((float(t) - t_min) / span * (width - 1))
        for x in xs:
            dots.add((px, round((1 - x) * (height - 1))))
    body = "".join(f'<rect x="{x}" y="{y}" width="1" height="1"/>' for x, y in sorted(dots))
    return (f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}"><rect width="100%" height="100%" fill="white"/>'
            f'<g fill="black">{body}</g></svg>\n')


def cmd_sweep(args) -> int:
    try:
        cfg = SweepConfig(args.t_min, args.t_max, args.steps, args.burn_in,
                          args.samples, args.seed, args.output, args.format)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    rows = run_sweep(cfg, args.workers)
    text = sweep_csv(rows) if cfg.format == "csv" else sweep_svg(rows, cfg.t_min, cfg.t_max)
    _write(cfg.output, text)
    return 0


def cmd_limitset(args) -> int:
    if args.depth < 1:
        raise UsageError("depth must be at least 1")
    _write(args.output, schottky.limit_set_csv([args.depth]))
    return 0


def cmd_coverage(args) -> int:
    if args.k < 0:
        raise UsageError("k must be nonnegative")
    _write(args.output, rauzy.coverage_table(args.k))
    return 0


def cmd_veech(args) -> int:
    checks = schottky.veech_checks()
    sys.stdout.write(schottky.format_report(checks))
    return 0 if all(c.passed for c in checks) else 3


def cmd_dump_map(args) -> int:
    slope = _one_direction(args)
    T = first_return_direction(slope)
    header = f"# slope {slope}\n" if args.t is None else f"# t {format_rational(args.t)}\n"
    _write(args.output, header + T.to_table())
    return 0


COMMANDS = {
    "classify": cmd_classify,
    "sweep": cmd_sweep,
    "limitset": cmd_limitset,
    "coverage": cmd_coverage,
    "veech": cmd_veech,
    "dump-map": cmd_dump_map,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        config = read_config(args.config) if args.config else {}
        _resolve(args, config, COMMAND_KEYS[args.command])
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"disco: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"disco: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

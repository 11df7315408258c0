"""Command-line entry point: ``specboltz <experiment> [flags]``.

Values come from the experiment defaults, then an optional JSON config file
(``--config``), then explicit flags, each overriding the previous one.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import SpecBoltzError
from .experiments import EXPERIMENTS, METHODS, PRECEDENCE, ExperimentConfig, run_experiment

# flag dest -> config field
_FIELDS = {
    "n": "N",
    "m": "M",
    "nr": "N_r",
    "radius_r": "R",
    "domain_l": "L",
    "kernel": "kernel",
    "dt": "dt",
    "t0": "t0",
    "t_end": "t_end",
    "method": "method",
    "out": "out",
    "cache": "cache",
    "threads": "threads",
    "mem_cap_bytes": "mem_cap_bytes",
    "fft_backend": "fft_backend",
    "direct_layout": "direct_layout",
    "every": "every",
    "warmup": "warmup",
    "repeats": "repeats",
}


def _add_common(p: argparse.ArgumentParser) -> None:
    S = argparse.SUPPRESS
    p.add_argument("--n", type=int, nargs="+", default=S, help="grid points per axis (one or more)")
    p.add_argument("--m", type=int, nargs="+", default=S, help="Lebedev point count(s)")
    p.add_argument("--nr", type=int, default=S, help="radial nodes (default: N)")
    p.add_argument("--radius-r", type=float, default=S, help="relative-velocity radius R")
    p.add_argument("--domain-l", type=float, default=S, help="half-width L (default (3+sqrt2)R/4)")
    p.add_argument("--kernel", default=S, help="vhs:gamma=G,b=B | vss:gamma=G,eta=E,b=B | maxwell | hardsphere")
    p.add_argument("--dt", type=float, default=S)
    p.add_argument("--t0", type=float, default=S, help="start time (evaluation time for bkw-error)")
    p.add_argument("--t-end", type=float, default=S)
    p.add_argument("--method", choices=METHODS, default=S)
    p.add_argument("--out", default=S, help="output directory")
    p.add_argument("--cache", default=S, help="weight cache directory")
    p.add_argument("--threads", type=int, default=S, help="FFT worker threads (1 = serial)")
    p.add_argument("--mem-cap-bytes", type=int, default=S)
    p.add_argument("--fft-backend", choices=("auto", "scipy", "torch"), default=S)
    p.add_argument("--direct-layout", choices=("dense", "radial"), default=S)
    p.add_argument("--every", type=int, default=S, help="diagnostic interval in steps")
    p.add_argument("--warmup", type=int, default=S, help="bench warm-up evaluations")
    p.add_argument("--repeats", type=int, default=S, help="bench measured evaluations")
    p.add_argument("--config", default=None, help="JSON file with any of the above keys")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="specboltz",
        description="Spectral Boltzmann collision operator experiments.",
        epilog=f"Precedence: {PRECEDENCE}.",
    )
    sub = parser.add_subparsers(dest="experiment", required=True)
    for name in EXPERIMENTS:
        _add_common(sub.add_parser(name))
    return parser


def _load_file(path: str) -> dict:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise SpecBoltzError(f"cannot read config file {path}: {exc}") from None
    if not isinstance(data, dict):
        raise SpecBoltzError(f"config file {path} must hold a JSON object")
    out = {}
    for key, value in data.items():
        k = key.replace("-", "_")
        out[_FIELDS.get(k, k)] = value
    return out


def config_from_args(argv: list[str] | None = None) -> tuple[ExperimentConfig, str | None]:
    args = vars(build_parser().parse_args(argv))
    experiment = args.pop("experiment")
    config_file = args.pop("config")
    values = _load_file(config_file) if config_file else {}
    values.pop("experiment", None)
    values.update({_FIELDS[k]: v for k, v in args.items()})
    return ExperimentConfig.for_experiment(experiment, **values), config_file


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        cfg, config_file = config_from_args(argv)
        report = run_experiment(cfg, argv=argv, config_file=config_file)
    except SpecBoltzError as exc:
        print(f"specboltz: error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {report.csv_path} ({len(report.rows)} rows) and {report.manifest_path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

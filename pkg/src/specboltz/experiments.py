"""Experiment drivers behind the command line.

Each driver takes an :class:`ExperimentConfig`, writes ``<experiment>.csv``
and ``manifest.json`` into the output directory and returns a
:class:`Report`.
"""

from __future__ import annotations

import csv
import dataclasses
import datetime as _dt
import json
import math
import os
import platform
import time
import warnings
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
import scipy

from . import __version__
from ._fft import BACKENDS, get_backend
from ._util import DEFAULT_MEM_CAP
from .analytic import BKW_EVAL_TIME, BKW_T0, bkw_f, bkw_Q, maxwell_moments_exact, two_stream
from .cache import cached_direct, cached_fast
from .direct import LAYOUTS, DirectCollisionOperator, precompute_G
from .errors import CapacityError, ConfigurationError
from .fast import FastCollisionOperator, default_radial, precompute_F
from .grid import VelocityGrid
from .kernels import VHS, parse_kernel
from .quadrature import available_lebedev, gauss_legendre, lebedev
from .timestepper import RelaxationRun, TrajectoryRow, relax

EXPERIMENTS = (
    "bkw-error",
    "bkw-relax",
    "moments-maxwell",
    "moments-hardsphere",
    "moments-vss",
    "bench",
    "precompute",
)
METHODS = ("direct", "fast", "both")
PRECEDENCE = "built-in experiment defaults < config file < command-line flags"

_MOMENT_DEFAULTS = dict(N=[32], M=[74], R=10.0, dt=0.3, t0=0.0, t_end=10.0, method="fast")
DEFAULTS: dict[str, dict] = {
    "bkw-error": dict(N=[8, 16, 32], M=[14], R=6.0, kernel="maxwell", t0=BKW_EVAL_TIME, method="both"),
    "bkw-relax": dict(N=[16], M=[14], R=6.0, kernel="maxwell", dt=0.1, t0=BKW_T0, t_end=10.0, method="fast"),
    "moments-maxwell": dict(_MOMENT_DEFAULTS, kernel="maxwell"),
    "moments-hardsphere": dict(_MOMENT_DEFAULTS, kernel="hardsphere", t_end=6.0),
    "moments-vss": dict(_MOMENT_DEFAULTS, kernel="vss:gamma=0.38,eta=0.4"),
    "bench": dict(N=[8, 16], M=[14], R=6.0, kernel="maxwell", method="both"),
    "precompute": dict(N=[16], M=[14], R=6.0, kernel="maxwell", method="fast"),
}


@dataclass
class ExperimentConfig:
    """Everything needed to re-run an experiment.

    ``N`` and ``M`` are lists; drivers that integrate in time need exactly
    one value of each. ``t0`` doubles as the evaluation time of
    ``bkw-error``. ``cache`` names a directory holding one weight file per
    configuration.
    """

    experiment: str
    N: list[int] = field(default_factory=lambda: [16])
    M: list[int] = field(default_factory=lambda: [14])
    N_r: int | None = None
    R: float = 6.0
    L: float | None = None
    kernel: str = "maxwell"
    dt: float = 0.1
    t0: float = 0.0
    t_end: float = 10.0
    method: str = "fast"
    out: str = "results"
    threads: int | None = None
    cache: str | None = None
    mem_cap_bytes: int = DEFAULT_MEM_CAP
    fft_backend: str = "auto"
    direct_layout: str = "dense"
    every: int = 1
    warmup: int = 2
    repeats: int = 5

    @classmethod
    def for_experiment(cls, experiment: str, **overrides) -> "ExperimentConfig":
        if experiment not in EXPERIMENTS:
            raise ConfigurationError(f"unknown experiment {experiment!r}; choose from {EXPERIMENTS}")
        values = dict(DEFAULTS[experiment])
        values.update({k: v for k, v in overrides.items() if v is not None})
        for key in ("N", "M"):
            if key in values and not isinstance(values[key], (list, tuple)):
                values[key] = [values[key]]
        unknown = set(values) - {f.name for f in dataclasses.fields(cls)}
        if unknown:
            raise ConfigurationError(f"unknown configuration keys: {sorted(unknown)}")
        values["N"] = [int(n) for n in values["N"]]
        values["M"] = [int(m) for m in values["M"]]
        return cls(experiment=experiment, **values)

    def problems(self) -> list[str]:
        """Every validation failure, so they can be reported together."""
        out = []
        if self.experiment not in EXPERIMENTS:
            out.append(f"unknown experiment {self.experiment!r}")
        if not self.N:
            out.append("at least one N is required")
        for n in self.N:
            if n < 4 or n % 2:
                out.append(f"N must be an even integer >= 4, got {n}")
        avail = available_lebedev()
        for m in self.M:
            if m not in avail:
                out.append(f"M={m} is not an available Lebedev rule {avail}")
        if self.N_r is not None and self.N_r < 1:
            out.append(f"N_r must be positive, got {self.N_r}")
        if not self.R > 0:
            out.append(f"R must be positive, got {self.R}")
        if self.L is not None and self.R > 0:
            lmin = (3.0 + math.sqrt(2.0)) * self.R / 4.0
            if self.L < lmin * (1 - 1e-12):
                out.append(f"L={self.L} violates the anti-aliasing bound L >= {lmin:.6g} for R={self.R}")
        try:
            parse_kernel(self.kernel)
        except ConfigurationError as exc:
            out.append(str(exc))
        if self.method not in METHODS:
            out.append(f"method must be one of {METHODS}, got {self.method!r}")
        if self.fft_backend not in BACKENDS:
            out.append(f"fft backend must be one of {BACKENDS}")
        if self.direct_layout not in LAYOUTS:
            out.append(f"direct layout must be one of {LAYOUTS}")
        if self.threads is not None and self.threads < 1:
            out.append("threads must be >= 1")
        if self.mem_cap_bytes <= 0:
            out.append("memory cap must be positive")
        if self.experiment in ("bkw-relax",) or self.experiment.startswith("moments-"):
            if len(self.N) != 1 or len(self.M) != 1:
                out.append(f"{self.experiment} takes a single N and a single M")
            if not self.dt > 0:
                out.append(f"dt must be positive, got {self.dt}")
            if not self.t_end > self.t0:
                out.append(f"t_end ({self.t_end}) must exceed t0 ({self.t0})")
        if self.experiment in ("bkw-relax", "bkw-error") and self.t0 <= 6.0 * math.log(2.5):
            out.append(f"BKW times must exceed 6 ln(5/2); got t0={self.t0}")
        if self.warmup < 0 or self.repeats < 1:
            out.append("bench needs warmup >= 0 and repeats >= 1")
        if self.every < 1:
            out.append("diagnostic interval must be >= 1")
        return out

    def validate(self) -> None:
        problems = self.problems()
        if problems:
            raise ConfigurationError("invalid configuration:\n  - " + "\n  - ".join(problems))

    def methods(self) -> list[str]:
        return ["direct", "fast"] if self.method == "both" else [self.method]

    def grid(self, N: int) -> VelocityGrid:
        return VelocityGrid(N, self.R, self.L)


@dataclass
class Report:
    csv_path: Path
    manifest_path: Path
    rows: list[dict]
    manifest: dict


class _Context:
    """Operator construction with optional caching; tracks cache hits for the manifest."""

    def __init__(self, cfg: ExperimentConfig):
        self.cfg = cfg
        self.kernel = parse_kernel(cfg.kernel)
        # default to every core; threads=1 is the bit-reproducible serial path
        self.threads = cfg.threads or os.cpu_count() or 1
        self.fft = get_backend(cfg.fft_backend, self.threads)
        if self.fft.name == "torch":
            import torch

            torch.set_num_threads(self.threads)
        self.cache_events: list[dict] = []

    def _cache_path(self, kind: str, N: int, N_r: int, M: int) -> Path:
        d = Path(self.cfg.cache)
        d.mkdir(parents=True, exist_ok=True)
        return d / f"{kind}-tag{self.kernel.tag}-N{N}-Nr{N_r}-M{M}.bspw"

    def fast(self, N: int, M: int) -> FastCollisionOperator:
        grid = self.cfg.grid(N)
        N_r = self.cfg.N_r or N
        if self.cfg.cache:
            path = self._cache_path("fast", N, N_r, M)
            W, hit = cached_fast(path, grid, self.kernel, N_r, M, self.cfg.mem_cap_bytes)
            self.cache_events.append({"path": str(path), "cache_hit": hit})
        else:
            W = precompute_F(grid, self.kernel, default_radial(grid, N_r), lebedev(M),
                             mem_cap=self.cfg.mem_cap_bytes)
        return FastCollisionOperator(W, self.threads, self.cfg.fft_backend)

    def direct(self, N: int) -> DirectCollisionOperator:
        grid = self.cfg.grid(N)
        N_r = self.cfg.N_r or N
        if self.cfg.cache and self.cfg.direct_layout == "dense":
            path = self._cache_path("direct", N, N_r, 0)
            W, hit = cached_direct(path, grid, self.kernel, N_r, self.cfg.mem_cap_bytes)
            self.cache_events.append({"path": str(path), "cache_hit": hit})
        else:
            W = precompute_G(grid, self.kernel, gauss_legendre(N_r, 0.0, grid.R),
                             layout=self.cfg.direct_layout, mem_cap=self.cfg.mem_cap_bytes)
        return DirectCollisionOperator(W, self.threads)

    def operator(self, method: str, N: int, M: int):
        return self.fast(N, M) if method == "fast" else self.direct(N)


def _fmt(v):
    if isinstance(v, (bool, np.bool_)):
        return str(bool(v)).lower()
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return "%.16e" % float(v)
    return "" if v is None else str(v)


def write_csv(path: Path, rows: list[dict], columns: list[str]) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(columns)
        for row in rows:
            w.writerow([_fmt(row.get(c)) for c in columns])


def _environment(ctx: _Context) -> dict:
    return {
        "threads": ctx.threads,
        "fft_backend": ctx.fft.name,
        "timestamp": _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds"),
        "python": platform.python_version(),
        "numpy": np.__version__,
        "scipy": scipy.__version__,
        "specboltz": __version__,
        "platform": platform.platform(),
    }


def _timed(fn, *args):
    t = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t


# ---------------------------------------------------------------- drivers


def _bkw_error(cfg, ctx):
    rows = []
    t = cfg.t0
    for N in cfg.N:
        grid = cfg.grid(N)
        f = bkw_f(t, grid)
        exact = bkw_Q(t, grid).values
        for method in cfg.methods():
            Ms = cfg.M if method == "fast" else [0]
            for M in Ms:
                row = dict(N=N, M=M, N_r=cfg.N_r or N, evaluator=method, t=t)
                try:
                    op = ctx.operator(method, N, M)
                except CapacityError as exc:
                    row.update(Linf_error=math.nan, eval_seconds=math.nan, status=f"refused: {exc}")
                    rows.append(row)
                    continue
                Q, secs = _timed(op, f)
                row.update(Linf_error=float(np.max(np.abs(Q.values - exact))), eval_seconds=secs,
                           imag_residual=Q.imag_residual, status="ok")
                rows.append(row)
    cols = ["N", "M", "N_r", "evaluator", "t", "Linf_error", "eval_seconds", "imag_residual", "status"]
    return rows, cols


def _moment_row(t, r: TrajectoryRow) -> dict:
    m = r.moments
    return dict(t=t, P11=m.P[0, 0], P22=m.P[1, 1], P33=m.P[2, 2], P12=m.P[0, 1],
                q1=m.q[0], q2=m.q[1], rho=m.rho, u1=m.u[0], u2=m.u[1], u3=m.u[2], T=m.T,
                entropy=r.entropy)


_MOMENT_KEYS = ("P11", "P22", "P33", "P12", "q1", "q2")


def _exact_moment_row(t: float) -> dict:
    m = maxwell_moments_exact(t)
    return dict(P11=m.P[0, 0], P22=m.P[1, 1], P33=m.P[2, 2], P12=m.P[0, 1], q1=m.q[0], q2=m.q[1])


def _moments(cfg, ctx):
    N, M = cfg.N[0], cfg.M[0]
    grid = cfg.grid(N)
    f0 = two_stream(grid)
    kernel = ctx.kernel
    exact = isinstance(kernel, VHS) and kernel.gamma == 0.0 and math.isclose(kernel.b, 1.0 / (4.0 * math.pi))
    trajectories = {}
    failures = {}
    for method in cfg.methods():
        run = RelaxationRun(cfg.t0, cfg.t_end, cfg.dt, method, cfg.every)
        traj = relax(f0, run, ctx.operator(method, N, M))
        trajectories[method] = traj
        if traj.error is not None:
            failures[method] = str(traj.error)
    rows = []
    direct_ref = {}
    if not exact and "direct" in trajectories and "fast" in trajectories:
        direct_ref = {r.t: _moment_row(r.t, r) for r in trajectories["direct"].rows}
    for method, traj in trajectories.items():
        for r in traj.rows:
            row = dict(evaluator=method, **_moment_row(r.t, r))
            ref = _exact_moment_row(r.t) if exact else direct_ref.get(r.t)
            if ref is not None:
                for k in _MOMENT_KEYS:
                    row[f"ref_{k}"] = ref[k]
                    row[f"diff_{k}"] = row[k] - ref[k]
            rows.append(row)
    cols = (["t", "evaluator", *_MOMENT_KEYS, "entropy", "rho", "u1", "u2", "u3", "T"]
            + [f"ref_{k}" for k in _MOMENT_KEYS] + [f"diff_{k}" for k in _MOMENT_KEYS])
    extra = {"reference": "exact" if exact else ("direct" if direct_ref else "none"),
             "failures": failures}
    return rows, cols, extra


def _bkw_relax(cfg, ctx):
    N, M = cfg.N[0], cfg.M[0]
    grid = cfg.grid(N)
    rows = []
    failures = {}
    for method in cfg.methods():
        run = RelaxationRun(cfg.t0, cfg.t_end, cfg.dt, method, cfg.every)
        traj = relax(bkw_f(cfg.t0, grid), run, ctx.operator(method, N, M),
                     reference=lambda t: bkw_f(t, grid))
        if traj.error is not None:
            failures[method] = str(traj.error)
        for r in traj.rows:
            m = r.moments
            rows.append(dict(t=r.t, evaluator=method, rel_Linf_error=r.error, rho=m.rho,
                             u1=m.u[0], u2=m.u[1], u3=m.u[2], T=m.T, entropy=r.entropy))
    cols = ["t", "evaluator", "rel_Linf_error", "rho", "u1", "u2", "u3", "T", "entropy"]
    return rows, cols, {"failures": failures}


def bench_operator(op, f, warmup: int = 2, repeats: int = 5) -> tuple[float, float]:
    """Mean and minimum wall time of ``op(f)`` after ``warmup`` untimed calls."""
    for _ in range(warmup):
        op(f)
    times = []
    for _ in range(repeats):
        times.append(_timed(op, f)[1])
    return float(np.mean(times)), float(np.min(times))


def _bench(cfg, ctx):
    rows = []
    for N in cfg.N:
        grid = cfg.grid(N)
        f = bkw_f(BKW_EVAL_TIME, grid)
        direct_mean = None
        for method in cfg.methods():
            for M in (cfg.M if method == "fast" else [0]):
                row = dict(N=N, M=M, N_r=cfg.N_r or N, evaluator=method, warmup=cfg.warmup,
                           repeats=cfg.repeats, threads=ctx.threads)
                try:
                    op = ctx.operator(method, N, M)
                except CapacityError as exc:
                    row.update(mean_seconds=math.nan, min_seconds=math.nan, speedup=math.nan,
                               status=f"refused: {exc}")
                    rows.append(row)
                    continue
                mean, best = bench_operator(op, f, cfg.warmup, cfg.repeats)
                if method == "direct":
                    direct_mean = mean
                speedup = direct_mean / mean if (method == "fast" and direct_mean) else math.nan
                row.update(mean_seconds=mean, min_seconds=best, speedup=speedup, status="ok")
                rows.append(row)
    cols = ["N", "M", "N_r", "evaluator", "warmup", "repeats", "threads", "mean_seconds",
            "min_seconds", "speedup", "status"]
    return rows, cols


def _precompute(cfg, ctx):
    if not cfg.cache:
        raise ConfigurationError("precompute needs --cache DIR")
    rows = []
    for N in cfg.N:
        for method in cfg.methods():
            for M in (cfg.M if method == "fast" else [0]):
                row = dict(N=N, M=M, N_r=cfg.N_r or N, evaluator=method)
                try:
                    _, secs = _timed(ctx.operator, method, N, M)
                except CapacityError as exc:
                    row.update(status=f"refused: {exc}")
                    rows.append(row)
                    continue
                ev = ctx.cache_events[-1]
                row.update(path=ev["path"], cache_hit=ev["cache_hit"], seconds=secs,
                           bytes=os.path.getsize(ev["path"]), status="ok")
                rows.append(row)
    return rows, ["N", "M", "N_r", "evaluator", "path", "bytes", "cache_hit", "seconds", "status"]


def run_experiment(cfg: ExperimentConfig, argv: list[str] | None = None,
                   config_file: str | None = None) -> Report:
    """Validate ``cfg``, run it, and write the CSV and manifest."""
    cfg.validate()
    out = Path(cfg.out)
    out.mkdir(parents=True, exist_ok=True)
    ctx = _Context(cfg)
    extra = {}
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        if cfg.experiment == "bkw-error":
            rows, cols = _bkw_error(cfg, ctx)
        elif cfg.experiment == "bkw-relax":
            rows, cols, extra = _bkw_relax(cfg, ctx)
        elif cfg.experiment.startswith("moments-"):
            rows, cols, extra = _moments(cfg, ctx)
        elif cfg.experiment == "bench":
            rows, cols = _bench(cfg, ctx)
        else:
            rows, cols = _precompute(cfg, ctx)
    csv_path = out / f"{cfg.experiment}.csv"
    write_csv(csv_path, rows, cols)
    manifest = {
        "experiment": cfg.experiment,
        "config": dataclasses.asdict(cfg),
        "precedence": PRECEDENCE,
        "config_file": config_file,
        "argv": argv,
        "environment": _environment(ctx),
        "cache": ctx.cache_events,
        "cache_hit": bool(ctx.cache_events) and all(e["cache_hit"] for e in ctx.cache_events),
        "csv": csv_path.name,
        "columns": cols,
        "warnings": [str(w.message) for w in caught],
        **extra,
    }
    manifest_path = out / "manifest.json"
    manifest_path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    for w in caught:
        warnings.warn_explicit(w.message, w.category, w.filename, w.lineno)
    return Report(csv_path, manifest_path, rows, manifest)

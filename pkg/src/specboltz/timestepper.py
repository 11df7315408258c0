"""Fixed-step RK4 integration of ``df/dt = Q(f)`` with per-step diagnostics."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import ConfigurationError, DataError, IntegrationError
from .grid import DistributionFunction, MomentSet, entropy, moments

Evaluator = Callable[[DistributionFunction], DistributionFunction]

DEFAULT_STEP_CAP = 100_000


@dataclass(frozen=True)
class RelaxationRun:
    """Time window and schedule.

    When ``(t_end - t0) / dt`` is not an integer the last step is shortened
    to land exactly on ``t_end``.
    """

    t0: float
    t_end: float
    dt: float
    evaluator: str = "fast"
    every: int = 1
    max_steps: int = DEFAULT_STEP_CAP

    def __post_init__(self):
        problems = []
        if not (self.dt > 0 and math.isfinite(self.dt)):
            problems.append(f"dt must be positive, got {self.dt}")
        if not self.t_end > self.t0:
            problems.append(f"t_end ({self.t_end}) must exceed t0 ({self.t0})")
        if self.evaluator not in ("direct", "fast"):
            problems.append(f"evaluator must be 'direct' or 'fast', got {self.evaluator!r}")
        if self.every < 1:
            problems.append("diagnostic interval must be >= 1")
        if not problems and self.n_steps > self.max_steps:
            problems.append(f"{self.n_steps} steps exceed the cap of {self.max_steps}")
        if problems:
            raise ConfigurationError("; ".join(problems))

    @property
    def n_steps(self) -> int:
        # tolerate round-off in (t_end - t0) / dt
        return max(1, math.ceil((self.t_end - self.t0) / self.dt - 1e-9))

    def times(self) -> np.ndarray:
        t = self.t0 + self.dt * np.arange(self.n_steps + 1)
        t[-1] = self.t_end
        return t


def rk4_step(f: DistributionFunction, dt: float, Q: Evaluator, step_index: int = 0,
             t: float = math.nan) -> DistributionFunction:
    """One classical Runge-Kutta step."""
    if not dt > 0:
        raise ConfigurationError(f"dt must be positive, got {dt}")
    grid = f.grid

    def stage(values: np.ndarray) -> np.ndarray:
        if not np.all(np.isfinite(values)):
            raise IntegrationError(step_index, t)
        try:
            out = Q(DistributionFunction(grid, values)).values
        except DataError as exc:
            raise IntegrationError(step_index, t) from exc
        if not np.all(np.isfinite(out)):
            raise IntegrationError(step_index, t)
        return out

    y = f.values
    k1 = stage(y)
    k2 = stage(y + 0.5 * dt * k1)
    k3 = stage(y + 0.5 * dt * k2)
    k4 = stage(y + dt * k3)
    new = y + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    if not np.all(np.isfinite(new)):
        raise IntegrationError(step_index, t)
    return DistributionFunction(grid, new)


@dataclass
class TrajectoryRow:
    t: float
    moments: MomentSet
    entropy: float
    error: float | None = None


@dataclass
class Trajectory:
    rows: list[TrajectoryRow] = field(default_factory=list)
    final: DistributionFunction | None = None
    error: Exception | None = None

    @property
    def completed(self) -> bool:
        return self.error is None

    @property
    def times(self) -> np.ndarray:
        return np.array([r.t for r in self.rows])

    @property
    def entropies(self) -> np.ndarray:
        return np.array([r.entropy for r in self.rows])


def relative_linf(num: DistributionFunction, ref: DistributionFunction) -> float:
    return float(np.max(np.abs(num.values - ref.values)) / np.max(np.abs(ref.values)))


def relax(f0: DistributionFunction, run: RelaxationRun, Q: Evaluator,
          reference: Callable[[float], DistributionFunction] | None = None,
          on_row: Callable[[TrajectoryRow], None] | None = None) -> Trajectory:
    """Integrate from ``run.t0`` to ``run.t_end`` and record diagnostics.

    Diagnostics are taken in physical space after every ``run.every``-th
    full step (and always at both ends). ``reference(t)``, when given, adds
    the relative L-infinity error against it. A failure stops the run; the
    rows gathered so far are returned together with the exception.
    """
    traj = Trajectory()

    def record(t: float, f: DistributionFunction) -> None:
        err = relative_linf(f, reference(t)) if reference is not None else None
        row = TrajectoryRow(float(t), moments(f), entropy(f), err)
        traj.rows.append(row)
        if on_row is not None:
            on_row(row)

    times = run.times()
    f = f0
    record(times[0], f)
    for i in range(run.n_steps):
        h = float(times[i + 1] - times[i])
        try:
            f = rk4_step(f, h, Q, i, float(times[i]))
        except IntegrationError as exc:
            traj.final = f
            traj.error = exc
            return traj
        if (i + 1) % run.every == 0 or i + 1 == run.n_steps:
            record(times[i + 1], f)
    traj.final = f
    return traj

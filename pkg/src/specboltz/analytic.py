"""Closed-form references: Maxwellians, the BKW solution, exact Maxwell-molecule moments."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import KernelDomainError
from .grid import DistributionFunction, MomentSet, VelocityGrid

# f(t) stays positive only for t > 6 ln(5/2)
BKW_POSITIVITY_TIME = 6.0 * math.log(2.5)
BKW_T0 = 5.5
BKW_EVAL_TIME = 6.5

# two-stream initial state used for the moment relaxation tests
TWO_STREAM_U1 = (-2.0, 2.0, 0.0)
TWO_STREAM_U2 = (2.0, 0.0, 0.0)


def maxwellian(rho: float, u, T: float, grid: VelocityGrid) -> DistributionFunction:
    """``rho (2 pi T)^(-3/2) exp(-|v-u|^2 / (2T))`` at the grid nodes."""
    if rho <= 0 or T <= 0:
        raise KernelDomainError("Maxwellian needs positive density and temperature")
    u = np.asarray(u, dtype=float)
    v1, v2, v3 = grid.mesh
    d2 = (v1 - u[0]) ** 2 + (v2 - u[1]) ** 2 + (v3 - u[2]) ** 2
    return DistributionFunction(grid, rho * (2.0 * math.pi * T) ** -1.5 * np.exp(-d2 / (2.0 * T)))


def two_stream(grid: VelocityGrid, u1=TWO_STREAM_U1, u2=TWO_STREAM_U2) -> DistributionFunction:
    """Equal mix of two unit-temperature Maxwellians drifting at ``u1`` and ``u2``."""
    a = maxwellian(0.5, u1, 1.0, grid).values
    b = maxwellian(0.5, u2, 1.0, grid).values
    return DistributionFunction(grid, a + b)


@dataclass(frozen=True)
class BKWState:
    t: float

    def __post_init__(self):
        if not self.t > BKW_POSITIVITY_TIME:
            raise KernelDomainError(
                f"BKW solution is not positive at t={self.t}; need t > {BKW_POSITIVITY_TIME:.6f}"
            )

    @property
    def K(self) -> float:
        return 1.0 - math.exp(-self.t / 6.0)

    @property
    def dK(self) -> float:
        return math.exp(-self.t / 6.0) / 6.0


def _bkw_parts(t: float, v2: np.ndarray):
    K = BKWState(t).K
    pref = 1.0 / (2.0 * (2.0 * math.pi * K) ** 1.5)
    g = pref * np.exp(-v2 / (2.0 * K))
    f = g * ((5.0 * K - 3.0) / K + (1.0 - K) / K**2 * v2)
    return K, g, f


def bkw_values(t: float, v2: np.ndarray) -> np.ndarray:
    """BKW density as a function of ``|v|^2``."""
    return _bkw_parts(t, v2)[2]


def bkw_Q_values(t: float, v2: np.ndarray) -> np.ndarray:
    """``df/dt`` of the BKW solution as a function of ``|v|^2``."""
    K, g, f = _bkw_parts(t, v2)
    dK = BKWState(t).dK
    return ((-1.5 / K + v2 / (2.0 * K**2)) * f + g * (3.0 / K**2 + (K - 2.0) / K**3 * v2)) * dK


def bkw_f(t: float, grid: VelocityGrid) -> DistributionFunction:
    return DistributionFunction(grid, bkw_values(t, grid.speed_squared))


def bkw_Q(t: float, grid: VelocityGrid) -> DistributionFunction:
    return DistributionFunction(grid, bkw_Q_values(t, grid.speed_squared))


def maxwell_moments_exact(t: float) -> MomentSet:
    """Exact ``P`` and ``q`` of the two-stream state under Maxwell molecules (``B = 1/(4 pi)``).

    Density, bulk velocity and temperature are the conserved values
    ``rho = 1``, ``u = (0, 1, 0)``, ``T = 8/3``.
    """
    if t < 0:
        raise KernelDomainError("time must be non-negative")
    e = math.exp(-t / 2.0)
    P = np.zeros((3, 3))
    P[0, 0] = 7.0 / 3.0 * e + 8.0 / 3.0
    P[1, 1] = -2.0 / 3.0 * e + 11.0 / 3.0
    P[2, 2] = -5.0 / 3.0 * e + 8.0 / 3.0
    P[0, 1] = P[1, 0] = -2.0 * e
    q = np.array([-2.0 * e, -2.0 / 3.0 * e + 43.0 / 6.0, 0.0])
    return MomentSet(rho=1.0, u=np.array([0.0, 1.0, 0.0]), T=8.0 / 3.0, P=P, q=q)

"""Radial and spherical quadrature rules."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ._lebedev_data import ORBITS
from .errors import ConfigurationError

# Polynomial degree integrated exactly by each tabulated Lebedev rule.
LEBEDEV_DEGREE = {
    6: 3, 14: 5, 26: 7, 38: 9, 50: 11, 74: 13, 86: 15, 110: 17, 146: 19,
    170: 21, 194: 23, 230: 25, 266: 27, 302: 29, 350: 31, 434: 35, 590: 41,
    770: 47, 974: 53, 1202: 59, 1454: 65, 1730: 71, 2030: 77,
}


@dataclass(frozen=True, eq=False)
class RadialRule:
    nodes: np.ndarray
    weights: np.ndarray
    a: float
    b: float

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self):
        return iter(zip(self.nodes, self.weights))


@dataclass(frozen=True, eq=False)
class SphereRule:
    """Points on the unit sphere with weights summing to ``4 pi``."""

    points: np.ndarray
    weights: np.ndarray
    degree: int
    name: str = ""

    def __len__(self) -> int:
        return len(self.weights)

    @property
    def M(self) -> int:
        return len(self.weights)

    def antipodes(self, tol: float = 1e-12) -> np.ndarray:
        """Index of the point at ``-omega`` for every node, or -1 if absent."""
        return _antipodes(self.points, tol)


def _antipodes(points: np.ndarray, tol: float) -> np.ndarray:
    # M is at most a few thousand; a dense distance table is fine
    d = np.abs(points[:, None, :] + points[None, :, :]).max(axis=2)
    j = d.argmin(axis=1)
    ok = d[np.arange(len(points)), j] <= tol
    return np.where(ok, j, -1)


def gauss_legendre(n: int, a: float, b: float) -> RadialRule:
    """``n``-point Gauss-Legendre rule mapped to ``[a, b]``."""
    if int(n) != n or n < 1:
        raise ConfigurationError(f"need at least one node, got n={n!r}")
    if not a < b:
        raise ConfigurationError(f"empty interval [{a}, {b}]")
    x, w = np.polynomial.legendre.leggauss(int(n))
    half = 0.5 * (b - a)
    return RadialRule(half * x + 0.5 * (a + b), half * w, float(a), float(b))


def _orbit_points(code: int, a: float, b: float) -> np.ndarray:
    if code == 1:
        base = [(1.0, 0.0, 0.0)]
    elif code == 2:
        s = math.sqrt(0.5)
        base = [(0.0, s, s)]
    elif code == 3:
        s = math.sqrt(1.0 / 3.0)
        base = [(s, s, s)]
    elif code == 4:
        base = [(a, a, math.sqrt(1.0 - 2.0 * a * a))]
    elif code == 5:
        base = [(a, math.sqrt(1.0 - a * a), 0.0)]
    elif code == 6:
        base = [(a, b, math.sqrt(1.0 - a * a - b * b))]
    else:
        raise ValueError(code)
    pts = set()
    for x, y, z in base:
        for perm in {(x, y, z), (x, z, y), (y, x, z), (y, z, x), (z, x, y), (z, y, x)}:
            for sx in (1, -1):
                for sy in (1, -1):
                    for sz in (1, -1):
                        pts.add((sx * perm[0] + 0.0, sy * perm[1] + 0.0, sz * perm[2] + 0.0))
    return np.array(sorted(pts))


@lru_cache(maxsize=None)
def _lebedev_cached(M: int) -> SphereRule:
    pts, wts = [], []
    for code, a, b, v in ORBITS[M]:
        p = _orbit_points(code, a, b)
        pts.append(p)
        wts.append(np.full(len(p), v))
    points = np.vstack(pts)
    weights = np.concatenate(wts)
    if len(points) != M:
        raise AssertionError(f"Lebedev table for {M} produced {len(points)} points")
    points /= np.linalg.norm(points, axis=1)[:, None]
    weights = weights * (4.0 * math.pi / weights.sum())
    points.setflags(write=False)
    weights.setflags(write=False)
    return SphereRule(points, weights, LEBEDEV_DEGREE[M], f"lebedev{M}")


def available_lebedev() -> list[int]:
    return sorted(ORBITS)


def lebedev(M: int) -> SphereRule:
    """Tabulated ``M``-point Lebedev rule, weights normalized to ``4 pi``."""
    if M not in ORBITS:
        raise ConfigurationError(
            f"no Lebedev rule with {M} points; available: {available_lebedev()}"
        )
    return _lebedev_cached(M)


def lebedev_for_degree(degree: int) -> SphereRule:
    """Smallest tabulated Lebedev rule exact to at least ``degree``."""
    for M in available_lebedev():
        if LEBEDEV_DEGREE[M] >= degree:
            return lebedev(M)
    raise ConfigurationError(
        f"no tabulated Lebedev rule reaches degree {degree} "
        f"(max {max(LEBEDEV_DEGREE.values())})"
    )


def tensor_sphere(n_azimuth: int, n_polar: int) -> SphereRule:
    """Product rule: periodic trapezoid in azimuth, Gauss-Legendre in ``cos(polar)``.

    The ``sin`` Jacobian of the polar angle is absorbed by integrating in
    ``cos(polar)``.
    """
    if n_azimuth < 1 or n_polar < 1:
        raise ConfigurationError("tensor sphere rule needs at least one node per direction")
    phi = 2.0 * math.pi * np.arange(n_azimuth) / n_azimuth
    wphi = np.full(n_azimuth, 2.0 * math.pi / n_azimuth)
    ct, wt = np.polynomial.legendre.leggauss(n_polar)
    st = np.sqrt(1.0 - ct**2)
    points = np.stack(
        [
            (st[None, :] * np.cos(phi)[:, None]).ravel(),
            (st[None, :] * np.sin(phi)[:, None]).ravel(),
            np.broadcast_to(ct[None, :], (n_azimuth, n_polar)).ravel(),
        ],
        axis=1,
    )
    weights = (wphi[:, None] * wt[None, :]).ravel()
    degree = min(n_azimuth - 1, 2 * n_polar - 1)
    return SphereRule(points, weights, degree, f"tensor{n_azimuth}x{n_polar}")


def sphere_moment(a: int, b: int, c: int) -> float:
    """``int_{S^2} x^a y^b z^c d omega`` in closed form."""
    if a % 2 or b % 2 or c % 2:
        return 0.0

    def dfact(n: int) -> int:
        return math.prod(range(n, 0, -2)) if n > 0 else 1

    return 4.0 * math.pi * dfact(a - 1) * dfact(b - 1) * dfact(c - 1) / dfact(a + b + c + 1)

"""Velocity grid, Fourier representation and grid diagnostics.

The distribution function lives on the uniform grid
``v_j = -L + j * 2L/N`` (``j = 0..N-1``) of the periodic cube ``[-L, L]^3``.
Its Fourier modes are

    fhat_k = (2L)^-3 * int f(v) exp(-i pi k.v / L) dv,    k in [-N/2, N/2-1]^3,

approximated by the rectangle rule, i.e. a DFT of the samples times the
phase ``exp(i pi (k1 + k2 + k3)) = (-1)^(k1+k2+k3)`` that accounts for the
grid starting at ``-L``.

Mode arrays are stored in conventional DFT order (index ``i`` holds
``k = i`` for ``i < N/2`` and ``k = i - N`` otherwise). Internally the
collision solvers work in *natural* order, ``k = -N/2 .. N/2-1`` ascending,
which is ``numpy.fft.fftshift`` of the DFT layout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
import scipy.fft as sfft

from .errors import ConfigurationError, DataError

AXES = (-3, -2, -1)
ANTIALIAS_FACTOR = (3.0 + math.sqrt(2.0)) / 2.0


@dataclass(frozen=True)
class VelocityGrid:
    """Uniform ``N^3`` velocity grid on ``[-L, L]^3``.

    ``R`` is the relative-velocity truncation radius; the support radius of
    ``f`` is ``S = R/2``. ``L`` defaults to ``(3 + sqrt 2) R / 4``, the
    smallest value satisfying the anti-aliasing condition
    ``L >= (3 + sqrt 2) S / 2``.
    """

    N: int
    R: float
    L: float = None  # type: ignore[assignment]

    def __post_init__(self):
        if not isinstance(self.N, (int, np.integer)) or self.N < 4 or self.N % 2:
            raise ConfigurationError(f"N must be an even integer >= 4, got {self.N!r}")
        if not (self.R > 0 and math.isfinite(self.R)):
            raise ConfigurationError(f"R must be positive and finite, got {self.R!r}")
        if self.L is None:
            object.__setattr__(self, "L", ANTIALIAS_FACTOR * self.R / 2.0)
        if not (self.L > 0 and math.isfinite(self.L)):
            raise ConfigurationError(f"L must be positive and finite, got {self.L!r}")
        object.__setattr__(self, "N", int(self.N))
        object.__setattr__(self, "R", float(self.R))
        object.__setattr__(self, "L", float(self.L))
        lmin = ANTIALIAS_FACTOR * self.S
        if self.L < lmin * (1.0 - 1e-12):
            raise ConfigurationError(
                f"L={self.L} violates the anti-aliasing condition L >= {lmin} "
                f"for S={self.S}"
            )

    @property
    def S(self) -> float:
        return self.R / 2.0

    @property
    def dv(self) -> float:
        return 2.0 * self.L / self.N

    @property
    def cell_volume(self) -> float:
        return self.dv**3

    @property
    def shape(self) -> tuple[int, int, int]:
        return (self.N, self.N, self.N)

    @cached_property
    def nodes(self) -> np.ndarray:
        return -self.L + self.dv * np.arange(self.N)

    @cached_property
    def mesh(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Broadcastable node coordinates ``(v1, v2, v3)``."""
        v = self.nodes
        return v[:, None, None], v[None, :, None], v[None, None, :]

    @cached_property
    def speed_squared(self) -> np.ndarray:
        v1, v2, v3 = self.mesh
        return v1**2 + v2**2 + v3**2

    @cached_property
    def wavenumbers(self) -> np.ndarray:
        """Integer wavenumbers in DFT order."""
        return np.fft.fftfreq(self.N, 1.0 / self.N).round().astype(np.int64)

    @cached_property
    def natural_wavenumbers(self) -> np.ndarray:
        """Integer wavenumbers ``-N/2 .. N/2-1`` in ascending order."""
        return np.arange(-self.N // 2, self.N // 2, dtype=np.int64)

    @cached_property
    def origin_phase(self) -> np.ndarray:
        """``exp(i pi (k1+k2+k3))`` in DFT order (real, +-1)."""
        s = np.where(self.wavenumbers % 2 == 0, 1.0, -1.0)
        return s[:, None, None] * s[None, :, None] * s[None, None, :]

    def natural_norms(self) -> np.ndarray:
        """``|k|`` for every mode, natural order."""
        k = self.natural_wavenumbers.astype(float)
        return np.sqrt(k[:, None, None] ** 2 + k[None, :, None] ** 2 + k[None, None, :] ** 2)

    def compatible(self, other: "VelocityGrid") -> bool:
        return self.N == other.N and self.R == other.R and self.L == other.L


@dataclass
class DistributionFunction:
    """Real samples of ``f`` at the grid nodes."""

    grid: VelocityGrid
    values: np.ndarray
    imag_residual: float = field(default=0.0, compare=False)

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        if self.values.shape != self.grid.shape:
            raise DataError(f"values have shape {self.values.shape}, grid needs {self.grid.shape}")
        if not np.all(np.isfinite(self.values)):
            raise DataError("distribution contains non-finite values")

    def outside_support_fraction(self) -> float:
        """Share of mass (in absolute value) carried by nodes with ``|v| > S``."""
        a = np.abs(self.values)
        total = a.sum()
        if total == 0:
            return 0.0
        return float(a[self.grid.speed_squared > self.grid.S**2].sum() / total)


@dataclass
class SpectralCoefficients:
    """Fourier modes ``fhat_k`` in DFT order."""

    grid: VelocityGrid
    modes: np.ndarray

    def __post_init__(self):
        self.modes = np.asarray(self.modes, dtype=complex)
        if self.modes.shape != self.grid.shape:
            raise DataError(f"modes have shape {self.modes.shape}, grid needs {self.grid.shape}")
        if not np.all(np.isfinite(self.modes)):
            raise DataError("spectral coefficients contain non-finite values")

    def natural(self) -> np.ndarray:
        return sfft.fftshift(self.modes, axes=AXES)

    @classmethod
    def from_natural(cls, grid: VelocityGrid, modes: np.ndarray) -> "SpectralCoefficients":
        return cls(grid, sfft.ifftshift(modes, axes=AXES))

    def mode(self, k1: int, k2: int, k3: int) -> complex:
        N = self.grid.N
        return complex(self.modes[k1 % N, k2 % N, k3 % N])


def forward_transform(f: DistributionFunction, workers: int | None = None) -> SpectralCoefficients:
    """Rectangle-rule Fourier coefficients of grid samples."""
    grid = f.grid
    if not np.all(np.isfinite(f.values)):
        raise DataError("distribution contains non-finite values")
    modes = sfft.fftn(f.values, axes=AXES, norm="forward", workers=workers)
    modes *= grid.origin_phase
    return SpectralCoefficients(grid, modes)


def inverse_transform(c: SpectralCoefficients, workers: int | None = None) -> DistributionFunction:
    """Evaluate the truncated Fourier series at the grid nodes.

    The real part is returned; the largest discarded imaginary magnitude is
    kept in ``imag_residual``.
    """
    grid = c.grid
    vals = sfft.ifftn(c.modes * grid.origin_phase, axes=AXES, norm="forward", workers=workers)
    resid = float(np.max(np.abs(vals.imag))) if vals.size else 0.0
    return DistributionFunction(grid, vals.real.copy(), imag_residual=resid)


def padded_length(N: int) -> int:
    """Per-axis FFT length that makes a circular convolution exact on the output block.

    With inputs on ``[-N/2, N/2-1]`` the linear convolution spans
    ``[-N, N-2]``; any length ``P >= 3N/2`` keeps the wrapped part away from
    the retained block ``[-N/2, N/2-1]``.
    """
    return 3 * N // 2


def pad_to_physical(natural: np.ndarray, P: int, workers: int | None = None) -> np.ndarray:
    """Zero-pad natural-order modes to ``P`` per axis and synthesize.

    Operates on the last three axes. Padding goes after the block, so the
    result differs from the symmetric padded synthesis by a modulation that
    :func:`physical_to_block` undoes.
    """
    return sfft.ifftn(natural, s=(P, P, P), axes=AXES, norm="forward", workers=workers)


def physical_to_block(phys: np.ndarray, N: int, workers: int | None = None) -> np.ndarray:
    """Analyze a product of two :func:`pad_to_physical` fields.

    Returns the linear convolution restricted to ``k in [-N/2, N/2-1]^3`` in
    natural order. Only the retained block of each axis is carried forward.
    """
    lo, hi = N // 2, 3 * N // 2
    out = sfft.fft(phys, axis=-3, norm="forward", workers=workers)[..., lo:hi, :, :]
    out = sfft.fft(out, axis=-2, norm="forward", workers=workers)[..., lo:hi, :]
    return sfft.fft(out, axis=-1, norm="forward", workers=workers)[..., lo:hi]


def convolve_natural(a: np.ndarray, b: np.ndarray, workers: int | None = None) -> np.ndarray:
    """Truncated linear convolution of two natural-order mode arrays."""
    N = a.shape[-1]
    P = padded_length(N)
    prod = pad_to_physical(a, P, workers) * pad_to_physical(b, P, workers)
    return physical_to_block(prod, N, workers)


def convolve(
    a: SpectralCoefficients,
    b: SpectralCoefficients,
    mode: str = "linear",
    workers: int | None = None,
) -> SpectralCoefficients:
    """``c_k = sum_{l+m=k} a_l b_m`` over the truncated index cube.

    ``mode="linear"`` evaluates the constrained sum exactly. ``mode="circular"``
    lets ``l + m`` wrap around modulo ``N`` (cheaper, not exact).
    """
    if not a.grid.compatible(b.grid):
        raise ConfigurationError("cannot convolve coefficients on different grids")
    grid = a.grid
    if mode == "linear":
        out = convolve_natural(a.natural(), b.natural(), workers)
        return SpectralCoefficients.from_natural(grid, out)
    if mode == "circular":
        pa = sfft.ifftn(a.modes, axes=AXES, norm="forward", workers=workers)
        pb = sfft.ifftn(b.modes, axes=AXES, norm="forward", workers=workers)
        return SpectralCoefficients(grid, sfft.fftn(pa * pb, axes=AXES, norm="forward", workers=workers))
    raise ConfigurationError(f"unknown convolution mode {mode!r}")


@dataclass
class MomentSet:
    """Grid moments of a distribution.

    ``P`` is the momentum flow tensor ``int f v_i v_j`` and ``q`` the energy
    flow vector ``1/2 int f v_i |v|^2``. ``T`` is NaN when ``rho <= 0``.
    """

    rho: float
    u: np.ndarray
    T: float
    P: np.ndarray
    q: np.ndarray

    @property
    def temperature_defined(self) -> bool:
        return math.isfinite(self.T)

    @property
    def energy(self) -> float:
        return float(np.trace(self.P))


def moments(f: DistributionFunction) -> MomentSet:
    grid = f.grid
    w = grid.cell_volume
    v = grid.mesh
    vals = f.values
    rho = float(vals.sum() * w)
    mom = np.array([float((vals * v[i]).sum() * w) for i in range(3)])
    P = np.empty((3, 3))
    for i in range(3):
        for j in range(i, 3):
            P[i, j] = P[j, i] = float((vals * v[i] * v[j]).sum() * w)
    fv2 = vals * grid.speed_squared
    q = np.array([0.5 * float((fv2 * v[i]).sum() * w) for i in range(3)])
    if rho > 0:
        u = mom / rho
        # int f |v-u|^2 = tr P - rho |u|^2
        T = (np.trace(P) - rho * float(u @ u)) / (3.0 * rho)
    else:
        u = np.zeros(3) if rho == 0 else mom / rho
        T = math.nan
    return MomentSet(rho, u, float(T), P, q)


def _positive_mask(values: np.ndarray) -> np.ndarray:
    fmax = float(values.max()) if values.size else 0.0
    if fmax <= 0:
        return np.zeros(values.shape, dtype=bool)
    return values > 1e-14 * fmax


def entropy(f: DistributionFunction) -> float:
    """``-int f ln f`` over nodes where ``f`` exceeds ``1e-14 max f``."""
    mask = _positive_mask(f.values)
    x = f.values[mask]
    return float(-(x * np.log(x)).sum() * f.grid.cell_volume)


def excluded_mass_fraction(f: DistributionFunction) -> float:
    """Share of the absolute mass that :func:`entropy` leaves out."""
    a = np.abs(f.values)
    total = a.sum()
    if total == 0:
        return 0.0
    return float(a[~_positive_mask(f.values)].sum() / total)

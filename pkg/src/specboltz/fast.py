"""Fast spectral evaluation of the collision operator.

The gain weight is written as a quadrature over the relative speed ``r`` and
the direction ``omega``::

    G(l, m) ~ sum_{q,s} w_q w_s F(l+m, r_q, omega_s)
                        exp(+i c_q l.omega_s) exp(-i c_q m.omega_s),
    c_q = pi r_q / (2L),
    F(k, r, omega) = r^2 int_{S^2} B(r, omega.g) exp(-i c k.g) dg.

Every node turns the weighted convolution into a plain convolution of two
phase-modulated copies of ``fhat``, evaluated with zero-padded FFTs. The
loss term is one convolution of ``fhat`` with ``G(m,m) fhat``.

Two implementation shortcuts keep the node loop cheap:

* the ``m`` factor at ``omega`` equals the ``l`` factor at ``-omega``, so for
  centrally symmetric rules each antipodal pair shares one product and one
  forward transform;
* for angle-independent kernels ``F`` does not depend on ``omega``, so the
  products of all directions of one radial node are summed in physical space
  before a single forward transform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import grid as gs
from ._fft import get_backend
from ._util import DEFAULT_MEM_CAP, check_capacity, resolving_sphere_rule, sinc
from .errors import ConfigurationError
from .grid import DistributionFunction, SpectralCoefficients, VelocityGrid
from .kernels import CollisionKernel
from .quadrature import RadialRule, SphereRule, gauss_legendre, lebedev

_COMPLEX = np.dtype(complex).itemsize


@dataclass(eq=False)
class FastWeights:
    """Precomputed data for the fast method.

    Exactly one of ``F_table`` and ``radial_profile`` is set.

    ``F_table`` has shape ``(N_r, M, N, N, N)``; the last three axes are the
    wavenumber ``k`` in natural order. ``radial_profile`` holds ``B(r_q)`` of
    an angle-independent kernel, from which ``F(k, r_q)`` follows in closed
    form. ``loss_diag`` is ``G(m, m)`` in natural order.
    """

    grid: VelocityGrid
    kernel: CollisionKernel
    radial: RadialRule
    sphere: SphereRule
    loss_diag: np.ndarray
    F_table: np.ndarray | None = None
    radial_profile: np.ndarray | None = None
    ghat_rule: SphereRule | None = None

    def __post_init__(self):
        if (self.F_table is None) == (self.radial_profile is None):
            raise ConfigurationError("exactly one of F_table and radial_profile must be given")

    @property
    def analytic(self) -> bool:
        return self.F_table is None

    @property
    def N_r(self) -> int:
        return len(self.radial)

    @property
    def M(self) -> int:
        return len(self.sphere)

    def F_radial(self, q: int) -> np.ndarray:
        """Closed-form ``F(k, r_q)`` on the natural ``k`` cube (analytic path only)."""
        cache = self.__dict__.setdefault("_F_radial_cache", {})
        if q not in cache:
            r = float(self.radial.nodes[q])
            c = math.pi * r / (2.0 * self.grid.L)
            cache[q] = 4.0 * math.pi * r * r * self.radial_profile[q] * sinc(c * self.grid.natural_norms())
        return cache[q]


def analytic_F_vhs(b_gamma: float, gamma: float, k, r: float, grid: VelocityGrid) -> float:
    """``F(k, r) = 4 pi b r^(gamma+2) Sinc(pi r |k| / (2L))`` for a VHS kernel."""
    kn = float(np.linalg.norm(np.asarray(k, dtype=float)))
    return float(4.0 * math.pi * b_gamma * r ** (gamma + 2.0) * sinc(math.pi * r * kn / (2.0 * grid.L)))


def default_radial(grid: VelocityGrid, n: int | None = None) -> RadialRule:
    return gauss_legendre(n or grid.N, 0.0, grid.R)


def _natural_dot(grid: VelocityGrid, scale: float, dirs: np.ndarray, k1: np.ndarray | None = None):
    """``scale * k . d`` for natural ``k`` and directions ``d``; shape ``(n1, N, N, len(d))``."""
    k = grid.natural_wavenumbers.astype(float)
    if k1 is None:
        k1 = k
    d = np.asarray(dirs)
    return scale * (
        k1[:, None, None, None] * d[:, 0]
        + k[None, :, None, None] * d[:, 1]
        + k[None, None, :, None] * d[:, 2]
    )


def precompute_F(
    grid: VelocityGrid,
    kernel: CollisionKernel,
    radial: RadialRule | None = None,
    sphere: SphereRule | None = None,
    ghat_rule: SphereRule | None = None,
    *,
    force_table: bool = False,
    mem_cap: int | None = DEFAULT_MEM_CAP,
) -> FastWeights:
    """Build :class:`FastWeights` for ``kernel``.

    Angle-independent kernels take the closed-form path and only the loss
    diagonal is computed (from the same radial rule). Otherwise, or with
    ``force_table``, ``F(k, r_q, omega_s)`` is tabulated by integrating over
    ``ghat_rule``. When ``ghat_rule`` is omitted, a Lebedev rule fine enough
    for the largest phase ``pi R sqrt(3) N / (2L)`` is used.
    """
    radial = radial or default_radial(grid)
    sphere = sphere or lebedev(14)
    if radial.a < 0 or radial.b > grid.R * (1 + 1e-12):
        raise ConfigurationError("radial rule must lie inside [0, R]")
    N = grid.N
    L = grid.L
    r_nodes, r_w = radial.nodes, radial.weights

    if kernel.angle_independent and not force_table:
        check_capacity("fast loss diagonal", N**3 * _COMPLEX, mem_cap)
        profile = np.array([kernel(float(r), 1.0) for r in r_nodes])
        mnorm = grid.natural_norms()
        diag = np.zeros(grid.shape)
        for r, w, B in zip(r_nodes, r_w, profile):
            diag += w * r * r * B * sinc(math.pi * r * mnorm / L)
        diag *= 16.0 * math.pi**2
        return FastWeights(grid, kernel, radial, sphere, diag.astype(complex), radial_profile=profile)

    n_entries = N**3 * len(radial) * len(sphere)
    check_capacity(f"F table ({n_entries} entries)", (n_entries + N**3) * _COMPLEX, mem_cap)
    if ghat_rule is None:
        ghat_rule = resolving_sphere_rule(math.pi * grid.R * math.sqrt(3.0) * N / (2.0 * L))
    g_pts, g_w = ghat_rule.points, ghat_rule.weights
    om = sphere.points
    cos_sg = np.clip(om @ g_pts.T, -1.0, 1.0)  # (M, Mg)
    table = np.empty((len(radial), len(sphere), N, N, N), dtype=complex)
    diag = np.zeros(grid.shape, dtype=complex)
    k = grid.natural_wavenumbers.astype(float)
    for q, (r, w) in enumerate(zip(r_nodes, r_w)):
        c = math.pi * r / (2.0 * L)
        Bw = kernel(np.full(cos_sg.shape, r), cos_sg) * g_w  # (M, Mg)
        # one k1 slab at a time keeps the phase block at N^2 * Mg
        for i in range(N):
            ph = np.exp(-1j * _natural_dot(grid, c, g_pts, k[i:i + 1]))[0]  # (N, N, Mg)
            table[q, :, i] = np.moveaxis(ph @ Bw.T, -1, 0) * (r * r)
        # loss diagonal: F at 2m summed over the same omega nodes
        beta = (sphere.weights[:, None] * Bw).sum(axis=0)  # (Mg,)
        for i in range(N):
            ph = np.exp(-1j * _natural_dot(grid, 2.0 * c, g_pts, k[i:i + 1]))[0]
            diag[i] += w * r * r * (ph @ beta)
    return FastWeights(grid, kernel, radial, sphere, diag, F_table=table, ghat_rule=ghat_rule)


def _pair_terms(sphere: SphereRule) -> list[tuple[int, int]]:
    """Group directions into antipodal pairs ``(s, s')``; ``s' = -1`` if unpaired."""
    anti = sphere.antipodes()
    terms = []
    for s in range(len(sphere)):
        a = int(anti[s])
        if a < 0:
            terms.append((s, -1))
        elif s < a:
            terms.append((s, a))
    return terms


def _modulated(fc: np.ndarray, kvec: np.ndarray, c: float, dirs: np.ndarray, scale: np.ndarray,
               out: np.ndarray) -> None:
    """Write ``scale_d exp(i c k.d) fhat_k`` for each direction ``d`` into ``out``.

    The phase is assembled from three per-axis factors; no per-node phase
    table is kept.
    """
    e = np.exp(1j * c * kvec[None, None, :] * dirs[:, :, None])  # (n, 3, N)
    e[:, 0] *= scale[:, None]
    tmp = (e[:, 0, :, None, None] * e[:, 1, None, :, None]) * fc[None]
    tmp *= e[:, 2, None, None, :]
    out[...] = tmp


def _analyze(phys: np.ndarray, N: int, fft) -> np.ndarray:
    """Forward transform of padded physical fields, keeping only the natural block."""
    lo, hi = N // 2, 3 * N // 2
    out = fft.fft(phys, -3)[..., lo:hi, :, :]
    out = fft.fft(out, -2)[..., lo:hi, :]
    return fft.fft(out, -1)[..., lo:hi]


def gain_natural(fc: np.ndarray, W: FastWeights, fft=None, chunk: int = 8) -> np.ndarray:
    """Gain term on natural-order modes ``fc``.

    ``fft`` is an engine from :func:`specboltz._fft.get_backend` (default
    ``"auto"``).
    """
    fft = fft or get_backend()
    grid = W.grid
    N = grid.N
    P = gs.padded_length(N)
    kvec = grid.natural_wavenumbers.astype(float)
    om = W.sphere.points
    ws = W.sphere.weights
    terms = _pair_terms(W.sphere)
    chunk = min(chunk, len(terms))
    # stays zero outside the leading N^3 block; transforms run out of place
    padded = np.zeros((2 * chunk, P, P, P), dtype=complex)
    out = np.zeros(grid.shape, dtype=complex)
    for q, (r, wq) in enumerate(zip(W.radial.nodes, W.radial.weights)):
        c = math.pi * r / (2.0 * grid.L)
        acc_phys = np.zeros((P, P, P), dtype=complex) if W.analytic else None
        acc = np.zeros(grid.shape, dtype=complex)
        for start in range(0, len(terms), chunk):
            block = terms[start:start + chunk]
            n = len(block)
            dirs = np.empty((2 * n, 3))
            scale = np.ones(2 * n)
            for j, (s, a) in enumerate(block):
                dirs[j] = om[s]
                # unpaired nodes need the explicit -omega factor
                dirs[n + j] = om[a] if a >= 0 else -om[s]
                if W.analytic:
                    # F is direction-free here, so the pair weight rides on the l factor
                    scale[j] = ws[s] + (ws[a] if a >= 0 else 0.0)
            _modulated(fc, kvec, c, dirs, scale, padded[:2 * n, :N, :N, :N])
            phys = fft.ifftn(padded[:2 * n])
            if W.analytic:
                acc_phys += np.einsum("ixyz,ixyz->xyz", phys[:n], phys[n:])
            else:
                conv = _analyze(phys[:n] * phys[n:], N, fft)
                for j, (s, a) in enumerate(block):
                    wF = ws[s] * W.F_table[q, s]
                    if a >= 0:
                        wF = wF + ws[a] * W.F_table[q, a]
                    acc += wF * conv[j]
            del phys
        if W.analytic:
            acc = W.F_radial(q) * _analyze(acc_phys, N, fft)
        out += wq * acc
    return out


def loss_natural(fc: np.ndarray, W: FastWeights, fft=None) -> np.ndarray:
    fft = fft or get_backend()
    N = W.grid.N
    P = gs.padded_length(N)
    padded = np.zeros((2, P, P, P), dtype=complex)
    padded[0, :N, :N, :N] = fc
    padded[1, :N, :N, :N] = W.loss_diag * fc
    phys = fft.ifftn(padded)
    return _analyze(phys[0] * phys[1], N, fft)


def _check(f: SpectralCoefficients, W: FastWeights) -> None:
    if not f.grid.compatible(W.grid):
        raise ConfigurationError("coefficients and fast weights live on different grids")


def gain_term(f: SpectralCoefficients, W: FastWeights, fft=None) -> SpectralCoefficients:
    _check(f, W)
    return SpectralCoefficients.from_natural(W.grid, gain_natural(f.natural(), W, fft))


def loss_term(f: SpectralCoefficients, W: FastWeights, fft=None) -> SpectralCoefficients:
    _check(f, W)
    return SpectralCoefficients.from_natural(W.grid, loss_natural(f.natural(), W, fft))


def collision_modes(f: SpectralCoefficients, W: FastWeights, fft=None) -> SpectralCoefficients:
    """``Qhat = Qhat+ - Qhat-``."""
    _check(f, W)
    fft = fft or get_backend()
    fc = f.natural()
    return SpectralCoefficients.from_natural(W.grid, gain_natural(fc, W, fft) - loss_natural(fc, W, fft))


def evaluate_fast(f: DistributionFunction, W: FastWeights, fft=None) -> DistributionFunction:
    """Collision operator on the grid; the discarded imaginary part is in ``imag_residual``."""
    if not f.grid.compatible(W.grid):
        raise ConfigurationError("distribution and fast weights live on different grids")
    fft = fft or get_backend()
    fhat = gs.forward_transform(f, fft.workers)
    return gs.inverse_transform(collision_modes(fhat, W, fft), fft.workers)


class FastCollisionOperator:
    """Callable ``Q(f)`` backed by precomputed :class:`FastWeights`."""

    name = "fast"

    def __init__(self, weights: FastWeights, workers: int | None = None, backend: str = "auto"):
        self.weights = weights
        self.fft = get_backend(backend, workers)

    @classmethod
    def build(cls, grid: VelocityGrid, kernel: CollisionKernel, M: int = 14, N_r: int | None = None,
              workers: int | None = None, backend: str = "auto", **kw) -> "FastCollisionOperator":
        W = precompute_F(grid, kernel, default_radial(grid, N_r), lebedev(M), **kw)
        return cls(W, workers, backend)

    @property
    def grid(self) -> VelocityGrid:
        return self.weights.grid

    def __call__(self, f: DistributionFunction) -> DistributionFunction:
        return evaluate_fast(f, self.weights, self.fft)

    def parts(self, f: DistributionFunction) -> tuple[DistributionFunction, DistributionFunction]:
        """Gain and loss terms in physical space."""
        w = self.fft.workers
        fhat = gs.forward_transform(f, w)
        return (
            gs.inverse_transform(gain_term(fhat, self.weights, self.fft), w),
            gs.inverse_transform(loss_term(fhat, self.weights, self.fft), w),
        )

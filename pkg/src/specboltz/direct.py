"""Direct O(N^6) spectral evaluation of the collision operator.

``Qhat_k = sum_{l+m=k} (G(l,m) - G(m,m)) fhat_l fhat_m`` with a precomputed
weight table. This is the slow reference the fast method is checked against.

For VHS kernels the angular integrals are done in closed form::

    G(l,m) = 16 pi^2 b int_0^R r^(gamma+2) Sinc(c |l+m|) Sinc(c |l-m|) dr,
    c = pi r / (2L),

so ``G`` depends on ``(l, m)`` only through ``|l+m|^2`` and ``|l-m|^2``. The
``"dense"`` layout stores all ``N^6`` entries; the ``"radial"`` layout stores
only the table over those two integers and expands rows on demand.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from ._util import DEFAULT_MEM_CAP, check_capacity, resolving_sphere_rule, sinc
from .errors import ConfigurationError
from .grid import DistributionFunction, SpectralCoefficients, VelocityGrid, forward_transform, inverse_transform
from .kernels import VHS, CollisionKernel
from .quadrature import RadialRule, SphereRule, gauss_legendre

LAYOUTS = ("dense", "radial")


@dataclass(eq=False)
class DirectWeights:
    """Weight table ``G(l, m)``, natural order, ``l`` and ``m`` flattened C-style.

    ``G`` has shape ``(N^3, N^3)`` for the dense layout. For the radial
    layout ``G`` is ``None`` and ``radial_table[|l+m|^2, |l-m|^2]`` holds the
    values. ``diag`` is ``G(m, m)`` with shape ``(N, N, N)``.
    """

    grid: VelocityGrid
    kernel: CollisionKernel
    diag: np.ndarray
    G: np.ndarray | None = None
    radial_table: np.ndarray | None = None

    @property
    def layout(self) -> str:
        return "dense" if self.G is not None else "radial"

    def row(self, l_index: tuple[int, int, int]) -> np.ndarray:
        """``G(l, m)`` for all ``m`` as an ``(N, N, N)`` array (natural indices)."""
        N = self.grid.N
        if self.G is not None:
            flat = (l_index[0] * N + l_index[1]) * N + l_index[2]
            return self.G[flat].reshape(N, N, N)
        k = self.grid.natural_wavenumbers
        l = np.asarray(l_index) - N // 2
        return self._radial_block(l, k, k, k)

    def _radial_block(self, l, m1, m2, m3) -> np.ndarray:
        n2 = ((l[0] + m1)[:, None, None] ** 2 + (l[1] + m2)[None, :, None] ** 2
              + (l[2] + m3)[None, None, :] ** 2)
        d2 = ((l[0] - m1)[:, None, None] ** 2 + (l[1] - m2)[None, :, None] ** 2
              + (l[2] - m3)[None, None, :] ** 2)
        return self.radial_table[n2, d2]

    def entry(self, l, m) -> complex:
        """``G(l, m)`` for signed wavenumber triples."""
        N = self.grid.N
        li = tuple(int(x) + N // 2 for x in l)
        mi = tuple(int(x) + N // 2 for x in m)
        return complex(self.row(li)[mi])


def _vhs_radial_table(grid: VelocityGrid, kernel: VHS, radial: RadialRule) -> np.ndarray:
    nmax = 3 * grid.N**2
    roots = np.sqrt(np.arange(nmax + 1, dtype=float))
    r = radial.nodes
    S = sinc((math.pi * r / (2.0 * grid.L))[:, None] * roots[None, :])  # (Nr, nmax+1)
    wr = radial.weights * r ** (kernel.gamma + 2.0)
    return 16.0 * math.pi**2 * kernel.b * (S.T * wr) @ S


def _general_row_factors(grid, kernel, radial, omega_rule, ghat_rule):
    """Per-node factors for the triple-quadrature weights.

    Returns ``E`` and ``D`` over the box ``[-N, N-1]^3`` (natural order,
    flattened) such that ``G(l,m) = sum_j E[l+m, j] D[l-m, j]``.
    """
    N = grid.N
    box = np.arange(-N, N, dtype=float)
    B3 = (2 * N) ** 3
    n_nodes = len(radial) * len(omega_rule)
    E = np.empty((B3, n_nodes), dtype=complex)
    D = np.empty((B3, n_nodes), dtype=complex)
    om, wo = omega_rule.points, omega_rule.weights
    gp, wg = ghat_rule.points, ghat_rule.weights
    cos_sg = np.clip(om @ gp.T, -1.0, 1.0)
    X = np.stack(np.meshgrid(box, box, box, indexing="ij"), axis=-1).reshape(-1, 3)
    for q, (r, w) in enumerate(zip(radial.nodes, radial.weights)):
        c = math.pi * r / (2.0 * grid.L)
        Bw = kernel(np.full(cos_sg.shape, r), cos_sg) * wg  # (M, Mg)
        cols = slice(q * len(om), (q + 1) * len(om))
        E[:, cols] = (np.exp(-1j * c * (X @ gp.T)) @ Bw.T) * (w * r * r * wo)
        D[:, cols] = np.exp(1j * c * (X @ om.T))
    return E, D


def precompute_G(
    grid: VelocityGrid,
    kernel: CollisionKernel,
    radial: RadialRule | None = None,
    omega_rule: SphereRule | None = None,
    ghat_rule: SphereRule | None = None,
    *,
    layout: str = "dense",
    general: bool | None = None,
    mem_cap: int | None = DEFAULT_MEM_CAP,
) -> DirectWeights:
    """Fill the direct weight table.

    VHS kernels use the reduced one-dimensional formula unless
    ``general=True``. Other kernels (or ``general=True``) integrate over
    ``r``, ``g`` and ``omega`` with the supplied rules; sphere rules default
    to Lebedev rules fine enough for the phase range of the index cube.
    """
    if layout not in LAYOUTS:
        raise ConfigurationError(f"unknown layout {layout!r}; choose from {LAYOUTS}")
    radial = radial or gauss_legendre(grid.N, 0.0, grid.R)
    N = grid.N
    N3 = N**3
    if general is None:
        general = not isinstance(kernel, VHS)
    k = grid.natural_wavenumbers

    if not general:
        table = _vhs_radial_table(grid, kernel, radial)
        n2 = k[:, None, None] ** 2 + k[None, :, None] ** 2 + k[None, None, :] ** 2
        diag = table[4 * n2, 0].astype(complex)
        if layout == "radial":
            check_capacity("radial weight table", table.nbytes + diag.nbytes, mem_cap)
            return DirectWeights(grid, kernel, diag, radial_table=table)
        check_capacity(f"dense weight table ({N3}^2 entries)", N3 * N3 * 8, mem_cap)
        G = np.empty((N3, N3))
        proto = DirectWeights(grid, kernel, diag, radial_table=table)
        for flat, idx in enumerate(itertools.product(range(N), repeat=3)):
            G[flat] = proto.row(idx).ravel()
        return DirectWeights(grid, kernel, diag, G=G)

    if layout != "dense":
        raise ConfigurationError("the radial layout needs an angle-independent VHS kernel")
    check_capacity(f"dense weight table ({N3}^2 entries)", N3 * N3 * 16, mem_cap)
    if omega_rule is None or ghat_rule is None:
        auto = resolving_sphere_rule(math.pi * grid.R * math.sqrt(3.0) * N / (2.0 * grid.L))
        omega_rule = omega_rule or auto
        ghat_rule = ghat_rule or auto
    n_nodes = len(radial) * len(omega_rule)
    check_capacity("direct row factors", 2 * (2 * N) ** 3 * n_nodes * 16 + N3 * N3 * 16, mem_cap)
    E, D = _general_row_factors(grid, kernel, radial, omega_rule, ghat_rule)
    box = 2 * N
    m = np.stack(np.meshgrid(k, k, k, indexing="ij"), axis=-1).reshape(-1, 3)
    G = np.empty((N3, N3), dtype=complex)
    for flat, l in enumerate(m):
        n = l + m + N
        d = l - m + N
        ni = (n[:, 0] * box + n[:, 1]) * box + n[:, 2]
        di = (d[:, 0] * box + d[:, 1]) * box + d[:, 2]
        G[flat] = np.einsum("ij,ij->i", E[ni], D[di])
    diag = G[np.arange(N3), np.arange(N3)].reshape(N, N, N).copy()
    return DirectWeights(grid, kernel, diag, G=G)


def _direct_sum(fc: np.ndarray, W: DirectWeights, use_row: bool, use_diag: bool) -> np.ndarray:
    """``sum_{l+m=k} w(l,m) fc_l fc_m`` with ``w = [G(l,m)] - [G(m,m)]``."""
    N = fc.shape[0]
    h = N // 2
    out = np.zeros(fc.shape, dtype=complex)
    kv = W.grid.natural_wavenumbers
    for idx in itertools.product(range(N), repeat=3):
        fl = fc[idx]
        if fl == 0:
            continue
        l = np.array(idx) - h
        # m-range per axis such that l + m stays in [-N/2, N/2-1]
        ms = tuple(slice(max(0, -li), min(N, N - li)) for li in l)
        ks = tuple(slice(s.start + li, s.stop + li) for s, li in zip(ms, l))
        if use_row:
            if W.G is not None:
                w = W.G[(idx[0] * N + idx[1]) * N + idx[2]].reshape(N, N, N)[ms]
            else:
                w = W._radial_block(l, kv[ms[0]], kv[ms[1]], kv[ms[2]])
            if use_diag:
                w = w - W.diag[ms]
        else:
            w = W.diag[ms]
        out[ks] += fl * (w * fc[ms])
    return out


def _check(f: SpectralCoefficients, W: DirectWeights) -> None:
    if not f.grid.compatible(W.grid):
        raise ConfigurationError("coefficients and direct weights live on different grids")


def evaluate_direct(f: SpectralCoefficients, W: DirectWeights) -> SpectralCoefficients:
    """Weighted convolution by explicit double summation."""
    _check(f, W)
    return SpectralCoefficients.from_natural(W.grid, _direct_sum(f.natural(), W, True, True))


def direct_gain(f: SpectralCoefficients, W: DirectWeights) -> SpectralCoefficients:
    _check(f, W)
    return SpectralCoefficients.from_natural(W.grid, _direct_sum(f.natural(), W, True, False))


def direct_loss(f: SpectralCoefficients, W: DirectWeights) -> SpectralCoefficients:
    _check(f, W)
    return SpectralCoefficients.from_natural(W.grid, _direct_sum(f.natural(), W, False, True))


class DirectCollisionOperator:
    """Callable ``Q(f)`` backed by a :class:`DirectWeights` table."""

    name = "direct"

    def __init__(self, weights: DirectWeights, workers: int | None = None):
        self.weights = weights
        self.workers = workers

    @classmethod
    def build(cls, grid: VelocityGrid, kernel: CollisionKernel, N_r: int | None = None,
              workers: int | None = None, **kw) -> "DirectCollisionOperator":
        W = precompute_G(grid, kernel, gauss_legendre(N_r or grid.N, 0.0, grid.R), **kw)
        return cls(W, workers)

    @property
    def grid(self) -> VelocityGrid:
        return self.weights.grid

    def __call__(self, f: DistributionFunction) -> DistributionFunction:
        fhat = forward_transform(f, self.workers)
        return inverse_transform(evaluate_direct(fhat, self.weights), self.workers)

    def parts(self, f: DistributionFunction) -> tuple[DistributionFunction, DistributionFunction]:
        fhat = forward_transform(f, self.workers)
        return (
            inverse_transform(direct_gain(fhat, self.weights), self.workers),
            inverse_transform(direct_loss(fhat, self.weights), self.workers),
        )

"""Independent reference computations shared by the unit and acceptance tests."""

import functools
import math

import numpy as np

from specboltz import VSS, DirectWeights, VelocityGrid, hard_spheres, lebedev, precompute_F, tensor_sphere
from specboltz.fast import default_radial
from specboltz.quadrature import sphere_moment

# g-rules that resolve the phase range of the index box at each N
GHAT = {4: 302, 8: 590}


def box_F(grid, kernel, radial, sphere, ghat):
    """``F(k, r_q, omega_s)`` on the box ``k in [-N, N-1]^3`` by plain quadrature.

    Shape ``(N_r, M, 2N, 2N, 2N)``; index ``k + N`` on each axis.
    """
    N = grid.N
    box = np.arange(-N, N, dtype=float)
    K = np.stack(np.meshgrid(box, box, box, indexing="ij"), axis=-1).reshape(-1, 3)
    out = np.empty((len(radial), len(sphere), len(K)), dtype=complex)
    for q, r in enumerate(radial.nodes):
        c = math.pi * r / (2.0 * grid.L)
        if kernel.angle_independent:
            out[q] = 4.0 * math.pi * r * r * kernel(r, 1.0) * np.sinc(c * np.linalg.norm(K, axis=1) / math.pi)
            continue
        cos = np.clip(sphere.points @ ghat.points.T, -1.0, 1.0)
        B = kernel(np.full(cos.shape, r), cos) * ghat.weights
        out[q] = r * r * (B @ np.exp(-1j * c * K @ ghat.points.T).T)
    return out.reshape(len(radial), len(sphere), 2 * N, 2 * N, 2 * N)


def oracle_weights(grid, kernel, radial, sphere, ghat):
    """Dense ``G~(l, m)`` assembled node by node, with its own diagonal."""
    N = grid.N
    F = box_F(grid, kernel, radial, sphere, ghat)
    k = np.arange(-N // 2, N // 2)
    m = np.stack(np.meshgrid(k, k, k, indexing="ij"), axis=-1).reshape(-1, 3)
    s = m[:, None, :] + m[None, :, :] + N  # box index of l+m
    d = (m[:, None, :] - m[None, :, :]).astype(float)
    G = np.zeros((len(m), len(m)), dtype=complex)
    for q, (r, wq) in enumerate(zip(radial.nodes, radial.weights)):
        c = math.pi * r / (2.0 * grid.L)
        for j, (om, wj) in enumerate(zip(sphere.points, sphere.weights)):
            G += wq * wj * F[q, j][s[..., 0], s[..., 1], s[..., 2]] * np.exp(1j * c * d @ om)
    diag = G[np.arange(len(m)), np.arange(len(m))].reshape(grid.shape)
    return G, diag


@functools.lru_cache(maxsize=None)
def oracle_case(N, sphere_key, kernel_name):
    grid = VelocityGrid(N, 6.0)
    kernel = {"hs": hard_spheres(), "vss": VSS(gamma=0.38, eta=0.4, b=1 / (4 * math.pi))}[kernel_name]
    sphere = tensor_sphere(3, 2) if sphere_key == "t3x2" else lebedev(sphere_key)
    radial = default_radial(grid)
    ghat = lebedev(GHAT[N])
    W = precompute_F(grid, kernel, radial, sphere, ghat)
    G, diag = oracle_weights(grid, kernel, radial, sphere, ghat)
    return W, DirectWeights(grid, kernel, diag, G=G)


def lebedev_max_error(rule) -> float:
    """Largest error over all monomials x^a y^b z^c with a+b+c <= degree."""
    p = rule.degree
    M = len(rule)
    pw = rule.points.T[:, None, :] ** np.arange(p + 1)[None, :, None]
    xy = (rule.weights * pw[0])[:, None, :] * pw[1][None, :, :]
    got = (xy.reshape(-1, M) @ pw[2].T).reshape(p + 1, p + 1, p + 1)
    worst = 0.0
    for a in range(p + 1):
        for b in range(p + 1 - a):
            for c in range(p + 1 - a - b):
                worst = max(worst, abs(got[a, b, c] - sphere_moment(a, b, c)))
    return worst


def gauss_legendre_max_error(rule, degree: int) -> float:
    """Largest relative error over monomials up to ``degree`` on ``[a, b]`` with ``a = 0``."""
    x = rule.nodes / rule.b
    w = rule.weights / rule.b
    return max(abs(np.sum(w * x**d) * (d + 1) - 1.0) for d in range(degree + 1))

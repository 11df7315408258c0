import numpy as np
import pytest

from specboltz import SpectralCoefficients, VelocityGrid


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="also run the full-size reproductions")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="full-size run; use --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def random_modes(grid: VelocityGrid, seed: int) -> SpectralCoefficients:
    rng = np.random.default_rng(seed)
    z = rng.standard_normal(grid.shape) + 1j * rng.standard_normal(grid.shape)
    return SpectralCoefficients(grid, z)


def rel_err(a, b) -> float:
    a = np.asarray(a)
    b = np.asarray(b)
    return float(np.max(np.abs(a - b)) / np.max(np.abs(b)))


def brute_convolution(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Constrained sum over natural-order arrays by explicit index loops."""
    N = a.shape[0]
    h = N // 2
    out = np.zeros_like(a, dtype=complex)
    idx = range(N)
    for l1 in idx:
        for l2 in idx:
            for l3 in idx:
                al = a[l1, l2, l3]
                for m1 in idx:
                    k1 = l1 + m1 - h
                    if not 0 <= k1 < N:
                        continue
                    for m2 in idx:
                        k2 = l2 + m2 - h
                        if not 0 <= k2 < N:
                            continue
                        for m3 in idx:
                            k3 = l3 + m3 - h
                            if 0 <= k3 < N:
                                out[k1, k2, k3] += al * b[m1, m2, m3]
    return out


def sliced_convolution(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Same constrained sum, looping over l only (for N where the full loop is slow)."""
    N = a.shape[0]
    h = N // 2
    out = np.zeros_like(a, dtype=complex)
    for l1 in range(N):
        for l2 in range(N):
            for l3 in range(N):
                s = [l - h for l in (l1, l2, l3)]
                src = tuple(slice(max(0, -d), min(N, N - d)) for d in s)
                dst = tuple(slice(x.start + d, x.stop + d) for x, d in zip(src, s))
                out[dst] += a[l1, l2, l3] * b[src]
    return out


# acceptance bookkeeping: criterion number -> list of (ok, detail)
CRITERIA: dict[int, list[tuple[bool, str]]] = {}


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        parts = CRITERIA[n]
        verdict = "PASS" if all(ok for ok, _ in parts) else "FAIL"
        details = "; ".join(d for _, d in parts)
        terminalreporter.write_line(f"criterion {n:2d}: {verdict}  {details}")

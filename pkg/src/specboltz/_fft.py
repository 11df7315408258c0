"""FFT engines for the padded convolution hot loop.

scipy's pocketfft is always available. When PyTorch is importable its CPU
FFT (MKL on x86 wheels) is noticeably faster for the batched 3-D transforms
the fast solver issues, so ``"auto"`` prefers it. Both are called with
``norm="forward"`` semantics: forward transforms divide by the length,
inverse transforms do not.
"""

from __future__ import annotations

import numpy as np
import scipy.fft as sfft

from .errors import ConfigurationError

BACKENDS = ("auto", "scipy", "torch")


class ScipyFFT:
    name = "scipy"

    def __init__(self, workers: int | None = None):
        self.workers = workers

    def ifftn(self, x: np.ndarray) -> np.ndarray:
        return sfft.ifftn(x, axes=(-3, -2, -1), norm="forward", workers=self.workers)

    def fft(self, x: np.ndarray, axis: int) -> np.ndarray:
        return sfft.fft(x, axis=axis, norm="forward", workers=self.workers)


class TorchFFT:
    name = "torch"

    def __init__(self, workers: int | None = None):
        import torch

        self._torch = torch
        self.workers = workers

    def ifftn(self, x: np.ndarray) -> np.ndarray:
        t = self._torch.from_numpy(np.ascontiguousarray(x))
        return self._torch.fft.ifftn(t, dim=(-3, -2, -1), norm="forward").numpy()

    def fft(self, x: np.ndarray, axis: int) -> np.ndarray:
        t = self._torch.from_numpy(np.ascontiguousarray(x))
        return self._torch.fft.fft(t, dim=axis, norm="forward").numpy()


def torch_available() -> bool:
    try:
        import torch  # noqa: F401
    except ImportError:
        return False
    return True


def get_backend(name: str = "auto", workers: int | None = None):
    if name not in BACKENDS:
        raise ConfigurationError(f"unknown FFT backend {name!r}; choose from {BACKENDS}")
    if name == "auto":
        name = "torch" if torch_available() else "scipy"
    if name == "torch":
        if not torch_available():
            raise ConfigurationError("FFT backend 'torch' requested but PyTorch is not installed")
        return TorchFFT(workers)
    return ScipyFFT(workers)

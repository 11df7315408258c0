"""Collision kernels ``B(r, cos theta)``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ConfigurationError, KernelDomainError

# Tags used by the weight cache header.
TAG_VHS = 1
TAG_VSS = 2
TAG_CUSTOM = 3


class CollisionKernel:
    """Base class. Subclasses implement :meth:`_evaluate` on arrays."""

    angle_independent: bool = False
    tag: int = TAG_CUSTOM

    def _evaluate(self, r: np.ndarray, cos_theta: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def __call__(self, r, cos_theta):
        r = np.asarray(r, dtype=float)
        c = np.asarray(cos_theta, dtype=float)
        if np.any(r < 0):
            raise KernelDomainError("relative speed must be non-negative")
        if np.any(np.abs(c) > 1.0 + 1e-12):
            raise KernelDomainError("cos(theta) must lie in [-1, 1]")
        out = self._evaluate(r, np.clip(c, -1.0, 1.0))
        return out if out.ndim else float(out)

    def params(self) -> tuple[float, float, float]:
        """Three numbers identifying the kernel in a cache header."""
        raise ConfigurationError(f"{type(self).__name__} has no serializable parameters")

    def describe(self) -> str:
        return type(self).__name__


def _power(r: np.ndarray, gamma: float) -> np.ndarray:
    if gamma == 0:
        return np.ones_like(r)
    # continuous extension at r = 0
    return np.where(r > 0, np.abs(r) ** gamma, 0.0)


@dataclass(frozen=True)
class VHS(CollisionKernel):
    """Variable hard sphere, ``B = b r^gamma``."""

    gamma: float
    b: float = 1.0 / (4.0 * math.pi)

    angle_independent = True
    tag = TAG_VHS

    def __post_init__(self):
        if not self.b > 0:
            raise ConfigurationError(f"VHS prefactor must be positive, got {self.b}")
        if not 0.0 <= self.gamma <= 1.0:
            raise ConfigurationError(f"VHS exponent must lie in [0, 1], got {self.gamma}")

    def _evaluate(self, r, cos_theta):
        return self.b * _power(r, self.gamma) * np.ones_like(cos_theta)

    def params(self):
        return (float(self.b), float(self.gamma), 0.0)

    def describe(self):
        return f"vhs:gamma={self.gamma!r},b={self.b!r}"


@dataclass(frozen=True)
class VSS(CollisionKernel):
    """Variable soft sphere, ``B = b r^gamma (1 + cos theta)^eta``."""

    gamma: float
    eta: float
    b: float = 1.0 / (4.0 * math.pi)

    angle_independent = False
    tag = TAG_VSS

    def __post_init__(self):
        if not self.b > 0:
            raise ConfigurationError(f"VSS prefactor must be positive, got {self.b}")
        if self.gamma < 0 or self.eta < 0:
            raise ConfigurationError("VSS exponents must be non-negative")

    def _evaluate(self, r, cos_theta):
        ang = np.ones_like(cos_theta) if self.eta == 0 else (1.0 + cos_theta) ** self.eta
        return self.b * _power(r, self.gamma) * ang

    def params(self):
        return (float(self.b), float(self.gamma), float(self.eta))

    def describe(self):
        return f"vss:gamma={self.gamma!r},eta={self.eta!r},b={self.b!r}"


class CustomKernel(CollisionKernel):
    """User-supplied ``B(r, cos theta)``; must be vectorized over numpy arrays.

    ``angle_independent`` has to be declared explicitly. Only a declared
    angle-independent kernel of the form ``b r^gamma`` can use the analytic
    path; a custom kernel always goes through the tabulated path.
    """

    tag = TAG_CUSTOM

    def __init__(self, func: Callable[[np.ndarray, np.ndarray], np.ndarray], *, angle_independent: bool, name: str = "custom"):
        self.func = func
        self.angle_independent = bool(angle_independent)
        self.name = name

    def _evaluate(self, r, cos_theta):
        r, c = np.broadcast_arrays(r, cos_theta)
        return np.asarray(self.func(r, c), dtype=float)

    def describe(self):
        return self.name


def maxwell_molecules() -> VHS:
    return VHS(gamma=0.0, b=1.0 / (4.0 * math.pi))


def hard_spheres() -> VHS:
    return VHS(gamma=1.0, b=1.0 / (4.0 * math.pi))


def argon_vss() -> VSS:
    return VSS(gamma=0.38, eta=0.4, b=1.0 / (4.0 * math.pi))


def parse_kernel(spec: str) -> CollisionKernel:
    """Parse ``vhs:gamma=G,b=B`` or ``vss:gamma=G,eta=E,b=B``.

    ``b`` defaults to ``1/(4 pi)``; ``maxwell`` and ``hardsphere`` are accepted
    as shorthands.
    """
    spec = spec.strip().lower()
    if spec in ("maxwell", "maxwell-molecules"):
        return maxwell_molecules()
    if spec in ("hardsphere", "hard-sphere"):
        return hard_spheres()
    name, _, rest = spec.partition(":")
    kv = {}
    for item in filter(None, rest.split(",")):
        key, sep, val = item.partition("=")
        if not sep:
            raise ConfigurationError(f"malformed kernel parameter {item!r} in {spec!r}")
        try:
            kv[key.strip()] = float(val)
        except ValueError:
            raise ConfigurationError(f"kernel parameter {key!r} is not a number: {val!r}") from None
    b = kv.pop("b", 1.0 / (4.0 * math.pi))
    if name == "vhs":
        gamma = kv.pop("gamma", 0.0)
        kernel: CollisionKernel = VHS(gamma=gamma, b=b)
    elif name == "vss":
        gamma = kv.pop("gamma", 0.0)
        eta = kv.pop("eta", 0.0)
        kernel = VSS(gamma=gamma, eta=eta, b=b)
    else:
        raise ConfigurationError(f"unknown kernel family {name!r} (expected vhs or vss)")
    if kv:
        raise ConfigurationError(f"unknown kernel parameters {sorted(kv)} for {name}")
    return kernel


def kernel_from_params(tag: int, params: tuple[float, float, float]) -> CollisionKernel:
    b, gamma, eta = params
    if tag == TAG_VHS:
        return VHS(gamma=gamma, b=b)
    if tag == TAG_VSS:
        return VSS(gamma=gamma, eta=eta, b=b)
    raise ConfigurationError(f"kernel tag {tag} cannot be reconstructed")

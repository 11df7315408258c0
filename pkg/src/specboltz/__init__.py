"""Spectral evaluation of the Boltzmann collision operator.

Two interchangeable evaluators share one Fourier representation: a direct
weighted convolution (``O(N^6)``) and a fast method that factors the
weights through a radial x sphere quadrature and evaluates one FFT
convolution per node (``O(M N^4 log N)``).
"""

__version__ = "0.1.0"

from .analytic import (
    BKWState,
    bkw_f,
    bkw_Q,
    maxwell_moments_exact,
    maxwellian,
    two_stream,
)
from .direct import (
    DirectCollisionOperator,
    DirectWeights,
    direct_gain,
    direct_loss,
    evaluate_direct,
    precompute_G,
)
from .errors import (
    CacheError,
    CapacityError,
    ConfigurationError,
    DataError,
    IntegrationError,
    KernelDomainError,
    SpecBoltzError,
)
from .fast import (
    FastCollisionOperator,
    FastWeights,
    analytic_F_vhs,
    evaluate_fast,
    gain_term,
    loss_term,
    precompute_F,
)
from .grid import (
    DistributionFunction,
    MomentSet,
    SpectralCoefficients,
    VelocityGrid,
    convolve,
    entropy,
    forward_transform,
    inverse_transform,
    moments,
)
from .kernels import VHS, VSS, CollisionKernel, CustomKernel, hard_spheres, maxwell_molecules, parse_kernel
from .quadrature import RadialRule, SphereRule, gauss_legendre, lebedev, tensor_sphere
from .timestepper import RelaxationRun, relax, rk4_step

__all__ = [
    "analytic_F_vhs",
    "bkw_f",
    "bkw_Q",
    "BKWState",
    "CacheError",
    "CapacityError",
    "CollisionKernel",
    "ConfigurationError",
    "convolve",
    "CustomKernel",
    "DataError",
    "direct_gain",
    "direct_loss",
    "DirectCollisionOperator",
    "DirectWeights",
    "DistributionFunction",
    "entropy",
    "evaluate_direct",
    "evaluate_fast",
    "FastCollisionOperator",
    "FastWeights",
    "forward_transform",
    "gain_term",
    "gauss_legendre",
    "hard_spheres",
    "IntegrationError",
    "inverse_transform",
    "KernelDomainError",
    "lebedev",
    "loss_term",
    "maxwell_molecules",
    "maxwell_moments_exact",
    "maxwellian",
    "moments",
    "MomentSet",
    "parse_kernel",
    "precompute_F",
    "precompute_G",
    "RadialRule",
    "relax",
    "RelaxationRun",
    "rk4_step",
    "SpecBoltzError",
    "SpectralCoefficients",
    "SphereRule",
    "tensor_sphere",
    "two_stream",
    "VelocityGrid",
    "VHS",
    "VSS",
]

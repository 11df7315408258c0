import math
import warnings

import numpy as np

from .errors import CapacityError
from .quadrature import LEBEDEV_DEGREE, SphereRule, lebedev, lebedev_for_degree

DEFAULT_MEM_CAP = 8 * 2**30


def sinc(x):
    """``sin(x)/x`` with a series branch near zero."""
    x = np.asarray(x, dtype=float)
    small = np.abs(x) < 1e-4
    safe = np.where(small, 1.0, x)
    x2 = x * x
    return np.where(small, 1.0 - x2 / 6.0 + x2 * x2 / 120.0, np.sin(safe) / safe)


def check_capacity(what: str, nbytes: int, cap: int | None) -> None:
    if cap is not None and nbytes > cap:
        raise CapacityError(what, nbytes, cap)


def resolving_sphere_rule(max_phase: float) -> SphereRule:
    """Lebedev rule that integrates ``exp(i x . g)`` to ~1e-10 for ``|x| <= max_phase``.

    Empirically a degree of ``1.25 |x| + 15`` is enough. Falls back to the
    largest tabulated rule (with a warning) when that is not available.
    """
    degree = int(math.ceil(1.25 * max_phase + 15))
    top = max(LEBEDEV_DEGREE, key=LEBEDEV_DEGREE.get)
    if degree > LEBEDEV_DEGREE[top]:
        warnings.warn(
            f"phase range {max_phase:.1f} needs a degree-{degree} sphere rule; "
            f"using the largest available ({top} points, degree {LEBEDEV_DEGREE[top]})",
            stacklevel=3,
        )
        return lebedev(top)
    return lebedev_for_degree(degree)

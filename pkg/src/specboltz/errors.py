"""Exception types raised across the package."""


class SpecBoltzError(Exception):
    """Base class for all package errors."""


class ConfigurationError(SpecBoltzError, ValueError):
    """Invalid or inconsistent configuration (grids, rules, sizes)."""


class DataError(SpecBoltzError, ValueError):
    """Input data is unusable, e.g. contains non-finite values."""


class KernelDomainError(SpecBoltzError, ValueError):
    """A function was evaluated outside its mathematical domain."""


class CapacityError(SpecBoltzError, MemoryError):
    """A weight table would exceed the configured memory cap."""

    def __init__(self, what: str, required_bytes: int, cap_bytes: int):
        self.required_bytes = int(required_bytes)
        self.cap_bytes = int(cap_bytes)
        super().__init__(
            f"{what} needs {self.required_bytes} bytes "
            f"({self.required_bytes / 2**30:.2f} GiB), above the cap of "
            f"{self.cap_bytes} bytes ({self.cap_bytes / 2**30:.2f} GiB)"
        )


class IntegrationError(SpecBoltzError, ArithmeticError):
    """Time integration produced a non-finite state."""

    def __init__(self, step: int, t: float):
        self.step = step
        self.t = t
        super().__init__(f"non-finite state at step {step} (t={t:g})")


class CacheError(SpecBoltzError):
    """A weight cache file is corrupt or unreadable."""

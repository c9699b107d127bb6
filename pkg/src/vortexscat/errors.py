"""Exception types raised by the library."""

from __future__ import annotations


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class MissingDataError(LookupError):
    """A tabulated quantity was requested for a key the table does not hold."""


class ConvergenceError(RuntimeError):
    """A numerical procedure did not reach its tolerance.

    The best available estimate and its error bound are kept on the
    exception so callers can decide whether the result is still usable.
    """

    def __init__(self, message: str, estimate: complex, error: float):
        super().__init__(f"{message} (estimate={estimate!r}, error={error:.3e})")
        self.estimate = estimate
        self.error = error

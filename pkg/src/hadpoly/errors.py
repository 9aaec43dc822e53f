"""Exception types raised across the package.

The CLI maps these onto exit codes, so keep the hierarchy flat and explicit.
"""

from __future__ import annotations


class HadpolyError(Exception):
    """Base class for all package errors."""


class DimensionError(HadpolyError, ValueError):
    """Operands live in different ambient spaces."""


class DomainError(HadpolyError, ValueError):
    """An argument is outside the mathematical domain of the operation."""


class PreconditionError(HadpolyError, ValueError):
    """A documented precondition does not hold for the given input."""


class InfeasibleError(HadpolyError, ValueError):
    """The requested construction has no valid instance for these parameters."""


class OutOfRangeError(InfeasibleError):
    """Dilation outside the range covered by the lower-bound theorem."""


class UnsupportedMethodError(HadpolyError, ValueError):
    """The chosen counting method does not apply to this input."""


class ResourceError(HadpolyError, RuntimeError):
    """Estimated work exceeds the configured budget."""

    def __init__(self, message: str, estimate: int | None = None, budget: int | None = None):
        super().__init__(message)
        self.estimate = estimate
        self.budget = budget


class ConsistencyError(HadpolyError, RuntimeError):
    """An internal invariant failed; indicates a bug, never bad input."""

"""Exception hierarchy shared across the package.

Numeric failures carry the discrete-time step index at which they occurred
whenever the caller knows it, so orbit drivers can report where an orbit
died instead of propagating Inf/NaN.
"""

from __future__ import annotations


class SolvmapsError(Exception):
    """Base class for all errors raised by this package."""


class NumericError(SolvmapsError):
    """Base class for arithmetic failures (carries an optional step index)."""

    def __init__(self, message: str, step: int | None = None):
        if step is not None:
            message = f"{message} (at step {step})"
        super().__init__(message)
        self.step = step


class ZeroToNegativePowerError(NumericError):
    """Zero base raised to a negative integer power."""


class NumericOverflowError(NumericError):
    """A computation produced a non-finite value."""


class NonIntegerExponentError(SolvmapsError):
    """Defensive: a closed-form exponent failed its exact divisibility check."""


class QRMismatchError(SolvmapsError):
    """Special closed form requested outside the q=2k, r=2(1+k) regime."""


class SingularChangeError(SolvmapsError):
    """Linear change of variables with zero determinant."""


class DegenerateQuadraticError(SolvmapsError):
    """Coefficient-to-state inversion degenerates (leading coefficient zero)."""


class ConfigError(SolvmapsError):
    """Invalid run configuration (CLI exit code 2)."""

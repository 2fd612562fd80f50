"""Exception types shared across the library."""

from __future__ import annotations


class ExtropyError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(ExtropyError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ParseError(ExtropyError, ValueError):
    """A distribution or weight specification string could not be parsed."""


class InvalidTransformationError(ExtropyError, ValueError):
    """A transformation violates its contract (not increasing, or psi(0) != 0)."""


class WeightValidityError(ExtropyError, ValueError):
    """A weight function produced a negative value."""


class IntegrandError(ExtropyError, ArithmeticError):
    """An integrand returned a non-finite value at an interior point.

    The offending abscissa is stored in ``u``.
    """

    def __init__(self, u: float, value: float):
        self.u = float(u)
        self.value = float(value)
        super().__init__(f"integrand returned non-finite value {value!r} at u={u!r}")


class DivergenceError(ExtropyError, ArithmeticError):
    """A measure integral diverges (or its quadrature failed to converge).

    ``variant`` names the measure variant, ``factor_index`` the product factor
    i when applicable, and ``error_estimate`` carries the quadrature error
    estimate when one exists.
    """

    def __init__(
        self,
        message: str,
        variant: str | None = None,
        factor_index: int | None = None,
        error_estimate: float | None = None,
    ):
        self.variant = variant
        self.factor_index = factor_index
        self.error_estimate = error_estimate
        super().__init__(message)


class InsufficientDataError(ExtropyError, ValueError):
    """A sample is too small for the requested computation."""


class BandwidthError(ExtropyError, ValueError):
    """No valid bandwidth can be produced (for example, zero sample variance)."""

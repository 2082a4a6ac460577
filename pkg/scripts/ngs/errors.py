"""Custom exceptions for the n-gon surface toolkit.

Provides a typed exception hierarchy for domain failures so the CLI can map
each failure class onto a stable exit code and message.
"""

from __future__ import annotations

from fractions import Fraction


class SurfaceError(Exception):
    """Base class for all domain failures raised by the library.

    Carries a human-readable message and the underlying cause, if any.
    """

    def __init__(self, message: str, cause: Exception | None = None):
        self.message = message
        self.cause = cause
        super().__init__(message)


class DomainInputError(SurfaceError):
    """Raised when an input lies outside the documented domain of an operation."""

    @classmethod
    def for_polygon_count(cls, n: int) -> DomainInputError:
        """Create a DomainInputError for an unsupported number of sides.

        Args:
            n: The rejected number of sides.

        Returns:
            DomainInputError naming the accepted range.
        """
        return cls(f"n must satisfy n >= 5 and n != 6, got {n}")

    @classmethod
    def for_sine_arguments(cls, alpha: Fraction, beta: Fraction) -> DomainInputError:
        """Create a DomainInputError for sine-ratio arguments out of range.

        Args:
            alpha: Numerator angle as a multiple of pi.
            beta: Denominator angle as a multiple of pi.

        Returns:
            DomainInputError naming the required ordering.
        """
        return cls(f"require 0 < alpha <= beta <= 1/2, got alpha={alpha}, beta={beta}")


class PointOutsideError(SurfaceError):
    """Raised when a point is not contained in the polygon or cylinder it was given for."""


class SingularityHitError(SurfaceError):
    """Raised when a straight path meets a cone point before reaching its end."""


class RefoldError(SurfaceError):
    """Raised when refolding a developed path exceeds its crossing cap."""

    def __init__(self, message: str, crossings: int, cause: Exception | None = None):
        self.crossings = crossings
        super().__init__(message, cause)


class GroupActionError(SurfaceError):
    """Raised when a matrix cannot be realised as an affine automorphism of the surface."""


class NonPeriodicDirectionError(SurfaceError):
    """Raised when a separatrix fails to close up within the trace bound."""


class NotParallelError(SurfaceError):
    """Raised when cylinders expected to be parallel are not."""


class SignUndecidedError(SurfaceError):
    """Raised when a nonzero cyclotomic number defeats every precision level."""


class HypothesisFailure(SurfaceError):
    """Raised when a three-cylinder configuration violates one of its conditions.

    Attributes:
        condition: Index (1-5) of the first violated condition.
    """

    def __init__(self, condition: int, message: str, cause: Exception | None = None):
        self.condition = condition
        super().__init__(f"condition ({condition}) violated: {message}", cause)

"""
Exceptions for the integrability-exponent service.
"""

from apps.core.exceptions import ValidationError


class ExponentError(ValidationError):
    """Base exception for integrability-exponent computations."""

    default_message = "Integrability exponent error."


class MissingPoleError(ExponentError):
    """Raised when a pole inside the region is absent from the sample points."""

    default_message = "A pole inside the region is missing from the sample points."


class NotNegativeOnRegionError(ExponentError):
    """Raised when the function is not negative on the region."""

    default_message = "Function must be negative on a neighborhood of the region."


__all__ = ["ExponentError", "MissingPoleError", "NotNegativeOnRegionError"]

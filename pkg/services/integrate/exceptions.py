"""
Exceptions for the integration service.
"""

from apps.core.exceptions import ComputationError, ValidationError


class IntegrationError(ComputationError):
    """Base exception for integration failures."""

    default_message = "Integration failed."


class DivergentIntegralError(IntegrationError):
    """Raised when exponent counting shows the integrand is not integrable."""

    default_message = "Integrand is not locally integrable."


class InvalidRegionError(ValidationError):
    """Raised for empty or malformed integration regions."""

    default_message = "Invalid integration region."

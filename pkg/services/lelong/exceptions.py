"""
Exceptions for the Lelong service.
"""

from apps.core.exceptions import ValidationError
from services.catalog import BidimensionError


class LelongError(ValidationError):
    """Base exception for Lelong computations."""

    default_message = "Lelong computation error."


class InvalidGridError(LelongError):
    """Raised for radius grids that are empty, unordered or non-positive."""

    default_message = "Invalid radius grid."


class NotNegativeError(LelongError):
    """Raised when a function cannot be shifted to be negative on the working ball."""

    default_message = "Function is not bounded above on the working ball."


__all__ = ["BidimensionError", "InvalidGridError", "LelongError", "NotNegativeError"]

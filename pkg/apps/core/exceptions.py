"""
Core exceptions for the laboratory.

Provides base exception classes that the services inherit from.
"""


class LabException(Exception):
    """
    Base exception for all laboratory-specific exceptions.

    All custom exceptions in the project should inherit from this class.
    """

    default_message = "An error occurred in the laboratory."

    def __init__(self, message: str | None = None, *args, **kwargs):
        """
        Initialize the exception.

        Args:
            message: Optional custom error message. Uses default_message if not provided.
        """
        self.message = message or self.default_message
        super().__init__(self.message, *args, **kwargs)


class ValidationError(LabException):
    """Raised when input validation fails."""

    default_message = "Invalid input."


class ConfigurationError(LabException):
    """Raised when a run configuration is invalid."""

    default_message = "Configuration error."


class ComputationError(LabException):
    """Raised when a numerical computation cannot produce a value."""

    default_message = "Computation failed."

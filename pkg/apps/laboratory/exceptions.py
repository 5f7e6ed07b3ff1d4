"""
Exceptions for the verification suite and report writing.
"""

from apps.core.exceptions import ConfigurationError


class UnknownCheckError(ConfigurationError):
    """Raised when a run selects a check id that is not registered."""

    default_message = "Unknown check id."


class ReportWriteError(ConfigurationError):
    """Raised when a report or profile cannot be written."""

    default_message = "Could not write the report."

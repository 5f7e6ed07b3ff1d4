"""
Exceptions for the Hermitian linear algebra service.
"""

from apps.core.exceptions import ComputationError, ValidationError


class InvalidMatrixError(ValidationError):
    """Raised when a matrix is not square, not Hermitian, or has the wrong size."""

    default_message = "Matrix is not a valid Hermitian matrix."


class InvalidSettingError(ValidationError):
    """Raised when (n, m) violates 1 <= m < n, n >= 2."""

    default_message = "Invalid (n, m) setting: need n >= 2 and 1 <= m < n."


class EigenvalueConvergenceError(ComputationError):
    """Raised when Jacobi sweeps fail to converge."""

    default_message = "Jacobi iteration did not converge."

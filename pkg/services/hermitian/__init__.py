"""
Hermitian linear algebra service.

Provides the (n, m) Setting, Hermitian matrices, Jacobi eigenvalues,
elementary symmetric functions and mixed discriminants.
"""

from .exceptions import EigenvalueConvergenceError, InvalidMatrixError, InvalidSettingError
from .linalg import (
    HermitianMatrix,
    Spectrum,
    eigenvalues,
    elementary_symmetric,
    identity_discriminant,
    mixed_discriminant,
    sigma_k,
)
from .setting import Setting

__all__ = [
    "EigenvalueConvergenceError",
    "HermitianMatrix",
    "InvalidMatrixError",
    "InvalidSettingError",
    "Setting",
    "Spectrum",
    "eigenvalues",
    "elementary_symmetric",
    "identity_discriminant",
    "mixed_discriminant",
    "sigma_k",
]

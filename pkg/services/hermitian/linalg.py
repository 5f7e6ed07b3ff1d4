"""
Dense linear algebra for small Hermitian matrices.

Eigenvalues by cyclic complex Jacobi rotations, elementary symmetric
functions and mixed discriminants. The batched helpers at the bottom are
the density engine for wedge products of (1,1)-forms: they evaluate
D(A_1 x k_1, ..., A_r x k_r, I x (n - q)) at many points at once.
"""

import itertools
import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .exceptions import EigenvalueConvergenceError, InvalidMatrixError

logger = logging.getLogger(__name__)

HERMITIAN_TOLERANCE = 1e-12
JACOBI_TOLERANCE = 1e-13
MAX_SWEEPS = 64


@dataclass(frozen=True, eq=False)
class HermitianMatrix:
    """
    An n x n complex Hermitian matrix.

    Build instances through :meth:`from_entries`, which symmetrizes
    small asymmetries and rejects large ones.
    """

    entries: NDArray[np.complex128]

    @classmethod
    def from_entries(
        cls, entries: ArrayLike, tolerance: float = HERMITIAN_TOLERANCE
    ) -> "HermitianMatrix":
        """
        Validate and symmetrize a square complex matrix.

        Args:
            entries: Row-major square array of complex values.
            tolerance: Largest accepted |A[j,k] - conj(A[k,j])|.

        Returns:
            HermitianMatrix holding (A + A*)/2.

        Raises:
            InvalidMatrixError: If not square or asymmetric beyond tolerance.

        Example:
            >>> HermitianMatrix.from_entries([[2, 1j], [-1j, 3]]).dim
            2
        """
        matrix = np.array(entries, dtype=np.complex128)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] == 0:
            raise InvalidMatrixError(f"Expected a square matrix, got shape {matrix.shape}")
        if not np.all(np.isfinite(matrix)):
            raise InvalidMatrixError("Matrix has non-finite entries")
        asymmetry = float(np.max(np.abs(matrix - matrix.conj().T)))
        if asymmetry > tolerance:
            raise InvalidMatrixError(
                f"Matrix is not Hermitian: asymmetry {asymmetry:.3e} exceeds {tolerance:.1e}"
            )
        matrix = 0.5 * (matrix + matrix.conj().T)
        matrix.setflags(write=False)
        return cls(entries=matrix)

    @classmethod
    def identity(cls, dim: int) -> "HermitianMatrix":
        """The dim x dim identity."""
        return cls.from_entries(np.eye(dim))

    @property
    def dim(self) -> int:
        return int(self.entries.shape[0])

    @property
    def trace(self) -> float:
        return float(np.trace(self.entries).real)

    def norm(self) -> float:
        """Frobenius norm."""
        return float(np.linalg.norm(self.entries))

    def shifted(self, c: float) -> "HermitianMatrix":
        """H + cI."""
        return HermitianMatrix.from_entries(self.entries + c * np.eye(self.dim))

    def __add__(self, other: "HermitianMatrix") -> "HermitianMatrix":
        return HermitianMatrix.from_entries(self.entries + other.entries)

    def __mul__(self, scalar: float) -> "HermitianMatrix":
        return HermitianMatrix.from_entries(float(scalar) * self.entries)

    __rmul__ = __mul__


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Real eigenvalues sorted ascending."""

    values: NDArray[np.float64]

    def __len__(self) -> int:
        return int(self.values.shape[0])

    @property
    def total(self) -> float:
        return float(np.sum(self.values))


def _jacobi_pair(matrix: NDArray[np.complex128], p: int, q: int) -> None:
    """Annihilate matrix[p, q] in place with a complex Givens rotation."""
    h = matrix[p, q]
    magnitude = abs(h)
    if magnitude == 0.0:
        return
    phase = h / magnitude
    theta = 0.5 * math.atan2(2.0 * magnitude, (matrix[p, p] - matrix[q, q]).real)
    c, s = math.cos(theta), math.sin(theta)

    rotation = np.eye(matrix.shape[0], dtype=np.complex128)
    # Phase on q makes the (p, q) entry real, then a real rotation zeroes it.
    rotation[p, p] = c
    rotation[p, q] = -s
    rotation[q, p] = s * phase.conjugate()
    rotation[q, q] = c * phase.conjugate()
    matrix[:] = rotation.conj().T @ matrix @ rotation
    matrix[p, q] = matrix[q, p] = 0.0
    np.fill_diagonal(matrix, matrix.diagonal().real)


def eigenvalues(matrix: HermitianMatrix) -> Spectrum:
    """
    Eigenvalues of a Hermitian matrix by cyclic Jacobi sweeps.

    Pairs are visited in row-major order. A sweep skips entries under the
    current threshold; iteration stops once the largest off-diagonal
    magnitude is below 1e-13 times the largest diagonal magnitude.

    Args:
        matrix: Hermitian input.

    Returns:
        Spectrum sorted ascending.

    Raises:
        EigenvalueConvergenceError: If MAX_SWEEPS sweeps do not converge.

    Example:
        >>> eigenvalues(HermitianMatrix.from_entries([[-2, 0], [0, 1]])).values.tolist()
        [-2.0, 1.0]
    """
    work = np.array(matrix.entries, dtype=np.complex128)
    dim = work.shape[0]
    scale = max(float(np.max(np.abs(work))), np.finfo(float).tiny)

    for sweep in range(MAX_SWEEPS):
        off = np.abs(work - np.diag(np.diag(work)))
        largest_off = float(off.max()) if dim > 1 else 0.0
        largest_diag = float(np.max(np.abs(work.diagonal())))
        if largest_off <= JACOBI_TOLERANCE * max(largest_diag, scale * 1e-3):
            values = np.sort(work.diagonal().real)
            logger.debug(f"Jacobi converged after {sweep} sweeps (dim={dim})")
            return Spectrum(values=values)

        threshold = 0.2 * float(np.sum(off)) / dim**2 if sweep < 3 else 0.0
        for p in range(dim - 1):
            for q in range(p + 1, dim):
                if abs(work[p, q]) > threshold:
                    _jacobi_pair(work, p, q)

    raise EigenvalueConvergenceError(
        f"Jacobi iteration did not converge in {MAX_SWEEPS} sweeps (dim={dim})"
    )


def elementary_symmetric(values: ArrayLike, k: int) -> NDArray[np.float64] | float:
    """
    k-th elementary symmetric function over the last axis.

    Args:
        values: Array of shape (..., d).
        k: Order, 0 <= k <= d.

    Returns:
        Array of shape (...) or a float for 1-D input.

    Example:
        >>> elementary_symmetric([1.0, 2.0, 3.0], 2)
        11.0
    """
    array = np.asarray(values, dtype=np.float64)
    d = array.shape[-1]
    if not 0 <= k <= d:
        raise InvalidMatrixError(f"Order k={k} out of range for {d} values")
    table = [np.ones(array.shape[:-1])] + [np.zeros(array.shape[:-1]) for _ in range(k)]
    for index in range(d):
        lam = array[..., index]
        for j in range(min(k, index + 1), 0, -1):
            table[j] = table[j] + lam * table[j - 1]
    result = table[k]
    return float(result) if np.ndim(result) == 0 else result


def sigma_k(matrix: HermitianMatrix, k: int) -> float:
    """
    k-th elementary symmetric function of the eigenvalues.

    Args:
        matrix: Hermitian input.
        k: Order, 1 <= k <= dim.

    Returns:
        sigma_k(eigenvalues(matrix)).

    Raises:
        InvalidMatrixError: If k is out of range.
    """
    if not 1 <= k <= matrix.dim:
        raise InvalidMatrixError(f"sigma_k needs 1 <= k <= {matrix.dim}, got k={k}")
    return float(elementary_symmetric(eigenvalues(matrix).values, k))


def mixed_discriminant(matrices: Sequence[HermitianMatrix]) -> float:
    """
    Mixed discriminant D(A_1, ..., A_n) by polarization.

    D = (1/n!) sum over subsets S of (-1)^(n - |S|) det(sum_{k in S} A_k),
    normalized so that D(A, ..., A) = det A.

    Args:
        matrices: Exactly n Hermitian matrices of dimension n.

    Returns:
        The mixed discriminant.

    Raises:
        InvalidMatrixError: On wrong count or dimension.

    Example:
        >>> eye = HermitianMatrix.identity(3)
        >>> round(mixed_discriminant([eye, eye, eye]), 12)
        1.0
    """
    if not matrices:
        raise InvalidMatrixError("mixed_discriminant needs at least one matrix")
    n = matrices[0].dim
    if len(matrices) != n or any(matrix.dim != n for matrix in matrices):
        raise InvalidMatrixError(
            f"mixed_discriminant needs exactly n={n} matrices of dimension {n}"
        )

    stack = np.stack([matrix.entries for matrix in matrices])
    total = 0.0
    for size in range(1, n + 1):
        sign = (-1.0) ** (n - size)
        for subset in itertools.combinations(range(n), size):
            total += sign * np.linalg.det(stack[list(subset)].sum(axis=0)).real
    return total / math.factorial(n)


def identity_discriminant(
    groups: Sequence[tuple[NDArray[np.complex128], int]], dim: int
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """
    Batched D(A_1 x k_1, ..., A_r x k_r, I x (dim - q)).

    Polarization with grouped multiplicities: with q = sum k_i and
    P(A) = sigma_q(A) / C(dim, q),

        D = (1/q!) sum_{0 <= j_i <= k_i} prod (-1)^(k_i - j_i) C(k_i, j_i)
            P(sum j_i A_i).

    Args:
        groups: Pairs (stack of shape (N, dim, dim), multiplicity).
        dim: Matrix dimension n.

    Returns:
        (values, scales): discriminants of shape (N,) and the natural
        magnitude prod ||A_i||^k_i used to recognize cancellation.
    """
    groups = [(np.asarray(stack), int(k)) for stack, k in groups if int(k) > 0]
    q = sum(k for _, k in groups)
    if q > dim:
        raise InvalidMatrixError(f"Total multiplicity {q} exceeds dimension {dim}")
    if q == 0:
        count = groups[0][0].shape[0] if groups else 1
        return np.ones(count), np.ones(count)

    count = groups[0][0].shape[0]
    values = np.zeros(count)
    scales = np.ones(count)
    for stack, k in groups:
        norms = np.max(np.abs(np.linalg.eigvalsh(stack)), axis=-1)
        scales = scales * norms**k

    for choice in itertools.product(*(range(k + 1) for _, k in groups)):
        if not any(choice):
            continue
        weight = 1.0
        combined = np.zeros((count, dim, dim), dtype=np.complex128)
        for (stack, k), j in zip(groups, choice, strict=True):
            weight *= (-1.0) ** (k - j) * math.comb(k, j)
            if j:
                combined = combined + j * stack
        spectrum = np.linalg.eigvalsh(combined)
        values = values + weight * elementary_symmetric(spectrum, q)

    values = values / (math.factorial(q) * math.comb(dim, q))
    return values, scales

"""
Model m-subharmonic functions.

Each model function is g(|w|^2) built from a one-variable profile g, where
w = z - center (radial) or the first k coordinates of z - center
(cylindrical), plus nonnegative combinations of those. Values, complex
Hessians and gradients are closed-form and vectorized over points.

Batch methods accept an optional ``base`` point: the arrays passed in are
then offsets from ``base``. This keeps full precision for points within
1e-20 of a pole placed at ``base``.
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum

import numpy as np
from numpy.typing import ArrayLike, NDArray

from services.hermitian import HermitianMatrix, Setting

from .exceptions import CatalogError, SingularPointError

logger = logging.getLogger(__name__)

Point = NDArray[np.complex128]

RADIAL_MATCH_TOLERANCE = 1e-14


def as_point(coords: ArrayLike, n: int | None = None) -> Point:
    """
    Coerce coordinates to a complex point.

    Args:
        coords: n complex coordinates.
        n: Expected dimension, if known.

    Returns:
        1-D complex array.

    Raises:
        CatalogError: On dimension mismatch.
    """
    point = np.asarray(coords, dtype=np.complex128).reshape(-1)
    if n is not None and point.shape[0] != n:
        raise CatalogError(f"Point has dimension {point.shape[0]}, expected {n}")
    return point


def point_from_reals(reals: ArrayLike) -> Point:
    """
    Build a complex point from interleaved real/imaginary parts.

    Example:
        >>> point_from_reals([1.0, 2.0, 0.0, -1.0]).tolist()
        [(1+2j), -1j]
    """
    values = np.asarray(reals, dtype=np.float64).reshape(-1)
    if values.shape[0] % 2:
        raise CatalogError("A point needs an even number of reals (re, im pairs)")
    return values[0::2] + 1j * values[1::2]


def zero_center(n: int) -> tuple[complex, ...]:
    return (0j,) * n


def _center_tuple(center: ArrayLike) -> tuple[complex, ...]:
    return tuple(complex(c) for c in as_point(center))


class ProfileKind(str, Enum):
    """One-variable profile families."""

    POWER = "power"  # g(t) = -t^(-s)
    LOG = "log"  # g(t) = log t
    AFFINE = "affine"  # g(t) = c0 + c1 t


@dataclass(frozen=True)
class Profile:
    """A profile g(t) with closed-form first and second derivatives."""

    kind: ProfileKind
    s: float = 0.0
    c0: float = 0.0
    c1: float = 1.0

    def __post_init__(self) -> None:
        if self.kind is ProfileKind.POWER and not (np.isfinite(self.s) and self.s > 0):
            raise CatalogError(f"Power profile needs s > 0, got s={self.s}")

    @classmethod
    def power(cls, s: float) -> "Profile":
        return cls(kind=ProfileKind.POWER, s=float(s))

    @classmethod
    def log(cls) -> "Profile":
        return cls(kind=ProfileKind.LOG)

    @classmethod
    def affine(cls, c0: float = 0.0, c1: float = 1.0) -> "Profile":
        return cls(kind=ProfileKind.AFFINE, c0=float(c0), c1=float(c1))

    @property
    def singular(self) -> bool:
        return self.kind is not ProfileKind.AFFINE

    @property
    def increasing(self) -> bool:
        return self.kind is not ProfileKind.AFFINE or self.c1 >= 0

    @property
    def leading(self) -> tuple[float, float]:
        """(e, c) with g'(t) ~ c t^(-e) as t -> 0."""
        if self.kind is ProfileKind.POWER:
            return self.s + 1.0, self.s
        if self.kind is ProfileKind.LOG:
            return 1.0, 1.0
        return 0.0, self.c1

    def value(self, t: ArrayLike) -> NDArray[np.float64]:
        t = np.asarray(t, dtype=np.float64)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            if self.kind is ProfileKind.POWER:
                return -np.power(t, -self.s)
            if self.kind is ProfileKind.LOG:
                return np.log(t)
            return self.c0 + self.c1 * t

    def first(self, t: ArrayLike) -> NDArray[np.float64]:
        t = np.asarray(t, dtype=np.float64)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            if self.kind is ProfileKind.POWER:
                return self.s * np.power(t, -self.s - 1.0)
            if self.kind is ProfileKind.LOG:
                return 1.0 / t
            return np.full_like(t, self.c1)

    def second(self, t: ArrayLike) -> NDArray[np.float64]:
        t = np.asarray(t, dtype=np.float64)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            if self.kind is ProfileKind.POWER:
                return -self.s * (self.s + 1.0) * np.power(t, -self.s - 2.0)
            if self.kind is ProfileKind.LOG:
                return -1.0 / (t * t)
            return np.zeros_like(t)


@dataclass(frozen=True)
class PoleComponent:
    """
    The affine subspace {z : z[:k] = center[:k]}.

    k equals the dimension for an isolated pole.
    """

    center: tuple[complex, ...]
    k: int

    @property
    def center_array(self) -> Point:
        return np.asarray(self.center, dtype=np.complex128)

    @property
    def is_point(self) -> bool:
        return self.k == len(self.center)

    @property
    def transverse_dim(self) -> int:
        """Real dimension transverse to the component."""
        return 2 * self.k

    def distance(self, points: ArrayLike, base: ArrayLike | None = None) -> NDArray[np.float64]:
        points = np.asarray(points, dtype=np.complex128)
        offset = points - self.center_array if base is None else (
            np.asarray(base, dtype=np.complex128) - self.center_array
        ) + points
        return np.linalg.norm(offset[..., : self.k], axis=-1)


class ModelFunction(ABC):
    """Interface shared by every catalog function."""

    @property
    @abstractmethod
    def dim(self) -> int:
        """Complex dimension n."""

    @abstractmethod
    def values(self, points: ArrayLike, base: ArrayLike | None = None) -> NDArray[np.float64]:
        """Function values at points of shape (..., n)."""

    @abstractmethod
    def hessians(
        self, points: ArrayLike, base: ArrayLike | None = None
    ) -> NDArray[np.complex128]:
        """Complex Hessians (d^2 f / dz_j dzbar_k) of shape (..., n, n)."""

    @abstractmethod
    def gradients(
        self, points: ArrayLike, base: ArrayLike | None = None
    ) -> NDArray[np.complex128]:
        """Real gradient packed as df/dx + i df/dy, shape (..., n)."""

    @abstractmethod
    def poles(self) -> tuple[PoleComponent, ...]:
        """Components of the pole set."""

    @abstractmethod
    def singular_exponents(self) -> dict[PoleComponent, tuple[float, float]]:
        """Per pole: (Hessian exponent e, value exponent s) in t = dist^2."""

    @abstractmethod
    def radial_center(self) -> Point | None:
        """Center about which the function is rotation-invariant, if any."""

    @abstractmethod
    def radial_value(self, t: ArrayLike) -> NDArray[np.float64]:
        """g(t) for a radial function."""

    @abstractmethod
    def radial_first(self, t: ArrayLike) -> NDArray[np.float64]:
        """g'(t) for a radial function."""

    @abstractmethod
    def radial_leading(self) -> tuple[float, float]:
        """(e, c) with g'(t) ~ c t^(-e) as t -> 0, for a radial function."""

    @abstractmethod
    def is_monotone_radial(self) -> bool:
        """True when the value only grows with the distance to the pole set."""

    def is_radial_about(self, a: ArrayLike) -> bool:
        center = self.radial_center()
        if center is None:
            return False
        a = as_point(a, self.dim)
        return bool(
            np.max(np.abs(center - a)) <= RADIAL_MATCH_TOLERANCE * (1.0 + np.max(np.abs(a)))
        )

    def scaled(self, coefficient: float) -> "ScaledSum":
        return ScaledSum(terms=((float(coefficient), self),))


@dataclass(frozen=True)
class _ProfileFunction(ModelFunction):
    """g(|w|^2) over the first ``block`` coordinates of z - center."""

    center: tuple[complex, ...]
    profile: Profile

    @property
    def block(self) -> int:
        raise NotImplementedError

    @property
    def dim(self) -> int:
        return len(self.center)

    def _relative(self, points: ArrayLike, base: ArrayLike | None) -> NDArray[np.complex128]:
        points = np.asarray(points, dtype=np.complex128)
        center = np.asarray(self.center, dtype=np.complex128)
        if base is None:
            return points - center
        return (np.asarray(base, dtype=np.complex128) - center) + points

    def _block_square(self, w: NDArray[np.complex128]) -> NDArray[np.float64]:
        block = w[..., : self.block]
        return np.sum(block.real**2 + block.imag**2, axis=-1)

    def values(self, points: ArrayLike, base: ArrayLike | None = None) -> NDArray[np.float64]:
        return self.profile.value(self._block_square(self._relative(points, base)))

    def hessians(
        self, points: ArrayLike, base: ArrayLike | None = None
    ) -> NDArray[np.complex128]:
        w = self._relative(points, base)
        t = self._block_square(w)
        d1 = self.profile.first(t)[..., None, None]
        d2 = self.profile.second(t)[..., None, None]
        k = self.block
        wb = w[..., :k]
        result = np.zeros(w.shape + (self.dim,), dtype=np.complex128)
        with np.errstate(invalid="ignore", over="ignore"):
            outer = wb.conj()[..., :, None] * wb[..., None, :]
            result[..., :k, :k] = d1 * np.eye(k) + d2 * outer
        return result

    def gradients(
        self, points: ArrayLike, base: ArrayLike | None = None
    ) -> NDArray[np.complex128]:
        w = self._relative(points, base)
        d1 = self.profile.first(self._block_square(w))[..., None]
        gradient = np.zeros_like(w)
        gradient[..., : self.block] = 2.0 * d1 * w[..., : self.block]
        return gradient

    def poles(self) -> tuple[PoleComponent, ...]:
        if not self.profile.singular:
            return ()
        return (PoleComponent(center=self.center, k=self.block),)

    def singular_exponents(self) -> dict[PoleComponent, tuple[float, float]]:
        if not self.profile.singular:
            return {}
        e, _ = self.profile.leading
        s = self.profile.s if self.profile.kind is ProfileKind.POWER else 0.0
        return {PoleComponent(center=self.center, k=self.block): (e, s)}

    def radial_value(self, t: ArrayLike) -> NDArray[np.float64]:
        return self.profile.value(t)

    def radial_first(self, t: ArrayLike) -> NDArray[np.float64]:
        return self.profile.first(t)

    def radial_leading(self) -> tuple[float, float]:
        return self.profile.leading

    def is_monotone_radial(self) -> bool:
        return self.profile.increasing


@dataclass(frozen=True)
class RadialFunction(_ProfileFunction):
    """g(|z - center|^2)."""

    @property
    def block(self) -> int:
        return self.dim

    def radial_center(self) -> Point | None:
        return np.asarray(self.center, dtype=np.complex128)


@dataclass(frozen=True)
class CylindricalFunction(_ProfileFunction):
    """g(|z' - center'|^2) over the first k coordinates."""

    k: int = 1

    def __post_init__(self) -> None:
        if not 1 <= self.k < self.dim:
            raise CatalogError(f"Cylindrical needs 1 <= k < n, got k={self.k}, n={self.dim}")

    @property
    def block(self) -> int:
        return self.k

    def radial_center(self) -> Point | None:
        return None


@dataclass(frozen=True)
class ScaledSum(ModelFunction):
    """Nonnegative combination sum c_i f_i."""

    terms: tuple[tuple[float, ModelFunction], ...]

    def __post_init__(self) -> None:
        if not self.terms:
            raise CatalogError("ScaledSum needs at least one term")
        dims = {function.dim for _, function in self.terms}
        if len(dims) != 1:
            raise CatalogError(f"ScaledSum terms have mixed dimensions {sorted(dims)}")
        for coefficient, _ in self.terms:
            if not (np.isfinite(coefficient) and coefficient >= 0):
                raise CatalogError(f"ScaledSum coefficients must be >= 0, got {coefficient}")

    @property
    def dim(self) -> int:
        return self.terms[0][1].dim

    @property
    def _active(self) -> list[tuple[float, ModelFunction]]:
        return [(c, f) for c, f in self.terms if c > 0]

    def values(self, points: ArrayLike, base: ArrayLike | None = None) -> NDArray[np.float64]:
        points = np.asarray(points, dtype=np.complex128)
        total = np.zeros(points.shape[:-1])
        for coefficient, function in self._active:
            total = total + coefficient * function.values(points, base)
        return total

    def hessians(
        self, points: ArrayLike, base: ArrayLike | None = None
    ) -> NDArray[np.complex128]:
        points = np.asarray(points, dtype=np.complex128)
        total = np.zeros(points.shape + (self.dim,), dtype=np.complex128)
        for coefficient, function in self._active:
            total = total + coefficient * function.hessians(points, base)
        return total

    def gradients(
        self, points: ArrayLike, base: ArrayLike | None = None
    ) -> NDArray[np.complex128]:
        points = np.asarray(points, dtype=np.complex128)
        total = np.zeros(points.shape, dtype=np.complex128)
        for coefficient, function in self._active:
            total = total + coefficient * function.gradients(points, base)
        return total

    def poles(self) -> tuple[PoleComponent, ...]:
        seen: dict[PoleComponent, None] = {}
        for _, function in self._active:
            for component in function.poles():
                seen.setdefault(component, None)
        return tuple(seen)

    def singular_exponents(self) -> dict[PoleComponent, tuple[float, float]]:
        merged: dict[PoleComponent, tuple[float, float]] = {}
        for _, function in self._active:
            for component, (e, s) in function.singular_exponents().items():
                old_e, old_s = merged.get(component, (0.0, 0.0))
                merged[component] = (max(e, old_e), max(s, old_s))
        return merged

    def radial_center(self) -> Point | None:
        centers = [function.radial_center() for _, function in self._active]
        if not centers or any(center is None for center in centers):
            return None
        first = centers[0]
        tolerance = RADIAL_MATCH_TOLERANCE * (1.0 + np.max(np.abs(first)))
        if all(np.max(np.abs(center - first)) <= tolerance for center in centers):
            return first
        return None

    def radial_value(self, t: ArrayLike) -> NDArray[np.float64]:
        t = np.asarray(t, dtype=np.float64)
        total = np.zeros_like(t)
        for coefficient, function in self._active:
            total = total + coefficient * function.radial_value(t)
        return total

    def radial_first(self, t: ArrayLike) -> NDArray[np.float64]:
        t = np.asarray(t, dtype=np.float64)
        total = np.zeros_like(t)
        for coefficient, function in self._active:
            total = total + coefficient * function.radial_first(t)
        return total

    def radial_leading(self) -> tuple[float, float]:
        leads = [(function.radial_leading(), c) for c, function in self._active]
        if not leads:
            return 0.0, 0.0
        top = max(e for (e, _), _ in leads)
        return top, sum(c * lead for (e, lead), c in leads if e == top)

    def is_monotone_radial(self) -> bool:
        return all(function.is_monotone_radial() for _, function in self._active)


def evaluate(function: ModelFunction, z: ArrayLike) -> float:
    """
    Value of a model function at a point; -inf on the pole set.

    Example:
        >>> quad = RadialFunction(center=zero_center(2), profile=Profile.affine())
        >>> evaluate(quad, [2.0, 0.0])
        4.0
    """
    return float(function.values(as_point(z, function.dim)))


def complex_hessian(function: ModelFunction, z: ArrayLike) -> HermitianMatrix:
    """
    Complex Hessian at an off-pole point.

    Raises:
        SingularPointError: If z lies on the pole set.
    """
    point = as_point(z, function.dim)
    for component in function.poles():
        if float(component.distance(point)) == 0.0:
            raise SingularPointError(f"Point {point.tolist()} lies on a pole of the function")
    matrix = function.hessians(point)
    if not np.all(np.isfinite(matrix)):
        raise SingularPointError(f"Hessian is not finite at {point.tolist()}")
    scale = 1.0 + float(np.max(np.abs(matrix)))
    return HermitianMatrix.from_entries(matrix, tolerance=1e-9 * scale)


def laplacian(function: ModelFunction, z: ArrayLike) -> float:
    """Real 2n-dimensional Laplacian, 4 * trace of the complex Hessian."""
    return 4.0 * complex_hessian(function, z).trace


def gradient(function: ModelFunction, z: ArrayLike) -> Point:
    """Real gradient at z, packed as df/dx + i df/dy."""
    return function.gradients(as_point(z, function.dim))


def fundamental_solution(setting: Setting, center: ArrayLike | None = None) -> ScaledSum:
    """
    The fundamental solution -(1/s)|z - center|^(-2s), s = n/m - 1.

    Args:
        setting: Active (n, m).
        center: Pole location, origin by default.

    Returns:
        ScaledSum with the single term (1/s) * radial power(s).

    Example:
        >>> f = fundamental_solution(Setting(n=4, m=2))
        >>> evaluate(f, [1.0, 0.0, 0.0, 0.0])
        -1.0
    """
    s = setting.power
    pole = zero_center(setting.n) if center is None else _center_tuple(as_point(center, setting.n))
    return ScaledSum(terms=((1.0 / s, RadialFunction(center=pole, profile=Profile.power(s))),))


def radial(profile: Profile, n: int, center: ArrayLike | None = None) -> RadialFunction:
    """Radial function about ``center`` (origin by default)."""
    pole = zero_center(n) if center is None else _center_tuple(as_point(center, n))
    return RadialFunction(center=pole, profile=profile)


def cylindrical(
    profile: Profile, n: int, k: int, center: ArrayLike | None = None
) -> CylindricalFunction:
    """Cylindrical function over the first k coordinates."""
    pole = zero_center(n) if center is None else _center_tuple(as_point(center, n))
    return CylindricalFunction(center=pole, profile=profile, k=k)

"""
Compact regions: closed balls and finite unions of closed balls.
"""

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from services.catalog import as_point
from services.integrate import InvalidRegionError
from services.integrate.sampling import ball_volume


@dataclass(frozen=True)
class CompactRegion:
    """
    A finite union of closed balls in C^n.

    Example:
        >>> region = CompactRegion.ball([0, 0], 1.0)
        >>> round(region.volume, 9)
        4.934802201
        >>> bool(region.contains([[0.5, 0.5]])[0])
        True
    """

    balls: tuple[tuple[tuple[complex, ...], float], ...]

    def __post_init__(self) -> None:
        if not self.balls:
            raise InvalidRegionError("A region needs at least one ball")
        dims = {len(center) for center, _ in self.balls}
        if len(dims) != 1:
            raise InvalidRegionError(f"Balls have mixed dimensions {sorted(dims)}")
        for _, radius in self.balls:
            if not (np.isfinite(radius) and radius > 0):
                raise InvalidRegionError(f"Ball radius must be positive, got {radius}")

    @classmethod
    def ball(cls, center: ArrayLike, radius: float) -> "CompactRegion":
        point = as_point(center)
        return cls(balls=((tuple(complex(c) for c in point), float(radius)),))

    @classmethod
    def union(cls, *regions: "CompactRegion") -> "CompactRegion":
        return cls(balls=tuple(ball for region in regions for ball in region.balls))

    @property
    def dim(self) -> int:
        return len(self.balls[0][0])

    @property
    def centers(self) -> NDArray[np.complex128]:
        return np.array([center for center, _ in self.balls], dtype=np.complex128)

    @property
    def radii(self) -> NDArray[np.float64]:
        return np.array([radius for _, radius in self.balls], dtype=np.float64)

    @property
    def is_ball(self) -> bool:
        return len(self.balls) == 1

    @property
    def radius(self) -> float:
        """Largest ball radius; the scale of the region."""
        return float(np.max(self.radii))

    def coverage(self, points: ArrayLike) -> NDArray[np.int64]:
        """Number of balls containing each point."""
        points = np.asarray(points, dtype=np.complex128).reshape(-1, self.dim)
        gaps = np.linalg.norm(points[:, None, :] - self.centers[None, :, :], axis=-1)
        return np.count_nonzero(gaps <= self.radii[None, :], axis=1)

    def contains(self, points: ArrayLike) -> NDArray[np.bool_]:
        return self.coverage(points) > 0

    def reach(self, point: ArrayLike, k: int | None = None) -> float:
        """Largest distance from ``point`` to the region, over the first k coordinates."""
        point = as_point(point, self.dim)
        k = self.dim if k is None else k
        offsets = self.centers[:, :k] - point[:k]
        return float(np.max(np.linalg.norm(offsets, axis=-1) + self.radii))

    def gap(self, point: ArrayLike, k: int | None = None) -> float:
        """Distance from the region to ``point`` (over the first k coordinates)."""
        point = as_point(point, self.dim)
        k = self.dim if k is None else k
        offsets = self.centers[:, :k] - point[:k]
        return float(max(0.0, np.min(np.linalg.norm(offsets, axis=-1) - self.radii)))

    def _disjoint(self) -> bool:
        centers, radii = self.centers, self.radii
        for i in range(len(self.balls)):
            for j in range(i + 1, len(self.balls)):
                if np.linalg.norm(centers[i] - centers[j]) < radii[i] + radii[j]:
                    return False
        return True

    @property
    def volume(self) -> float:
        """
        Lebesgue volume; exact for disjoint balls.

        Overlapping unions use a fixed-seed Monte-Carlo estimate.
        """
        if self._disjoint():
            return float(sum(ball_volume(2 * self.dim, r) for r in self.radii))
        rng = np.random.default_rng(0)
        _, density = self.sample_uniform(rng, 200_000)
        return float(np.mean(1.0 / density))

    def sample_uniform(
        self, rng: np.random.Generator, count: int
    ) -> tuple[NDArray[np.complex128], NDArray[np.float64]]:
        """
        Points drawn by picking a ball in proportion to its volume, then
        uniformly inside it.

        Returns:
            (points, proposal density at each point).
        """
        real_dim = 2 * self.dim
        volumes = np.array([ball_volume(real_dim, r) for r in self.radii])
        picks = rng.choice(len(self.balls), size=count, p=volumes / volumes.sum())
        gaussian = rng.standard_normal(size=(count, real_dim))
        gaussian /= np.linalg.norm(gaussian, axis=1, keepdims=True)
        radii = self.radii[picks] * rng.random(count) ** (1.0 / real_dim)
        offsets = gaussian * radii[:, None]
        points = self.centers[picks] + offsets[:, 0::2] + 1j * offsets[:, 1::2]
        return points, self.coverage(points) / volumes.sum()

"""
Radius grids and tolerances for Lelong computations.
"""

from dataclasses import dataclass, field, replace

import numpy as np
from django.conf import settings
from numpy.typing import NDArray

from apps.core.exceptions import ConfigurationError
from apps.core.utils import geometric_grid

from .exceptions import InvalidGridError


def _lab(key: str, default):
    return getattr(settings, "LAB", {}).get(key, default)


def _tolerance(key: str, default: float) -> float:
    return float(_lab("TOLERANCES", {}).get(key, default))


@dataclass(frozen=True)
class LelongConfig:
    """
    Working radii and acceptance tolerances.

    Example:
        >>> config = LelongConfig(r_min=1e-4, r_max=0.5, points=32)
        >>> config.radii().shape
        (32,)
    """

    r_min: float = field(default_factory=lambda: _lab("R_MIN", 1e-4))
    r_max: float = field(default_factory=lambda: _lab("R_MAX", 0.5))
    points: int = field(default_factory=lambda: _lab("PROFILE_POINTS", 32))
    fit_points: int = 8
    lelong_tolerance: float = field(default_factory=lambda: _tolerance("LELONG", 1e-3))
    convexity_tolerance: float = field(
        default_factory=lambda: _tolerance("CONVEXITY", 1e-9)
    )
    usc_tolerance: float = field(default_factory=lambda: _tolerance("USC", 1e-3))
    atom_tolerance: float = field(default_factory=lambda: _tolerance("ATOM", 1e-2))
    sigma: float = field(default_factory=lambda: _tolerance("SIGMA", 3.0))

    def __post_init__(self) -> None:
        if self.points < self.fit_points or self.fit_points < 4:
            raise ConfigurationError(
                f"Need points >= fit_points >= 4, got points={self.points}, "
                f"fit_points={self.fit_points}"
            )

    def radii(
        self, r_min: float | None = None, r_max: float | None = None
    ) -> NDArray[np.float64]:
        """Geometric grid from r_min to r_max with ``points`` radii."""
        return radius_grid(
            self.r_min if r_min is None else r_min,
            self.r_max if r_max is None else r_max,
            self.points,
        )

    def fit_radii(
        self, r_min: float | None = None, r_max: float | None = None
    ) -> NDArray[np.float64]:
        """The smallest ``fit_points`` radii of the grid."""
        return self.radii(r_min, r_max)[: self.fit_points]

    def with_overrides(self, **changes) -> "LelongConfig":
        return replace(self, **changes)


def radius_grid(r_min: float, r_max: float, points: int) -> NDArray[np.float64]:
    """
    Strictly increasing geometric radius grid.

    Raises:
        InvalidGridError: Unless 0 < r_min < r_max and points >= 2.
    """
    if not (np.isfinite(r_min) and np.isfinite(r_max)) or r_min <= 0 or r_max <= r_min:
        raise InvalidGridError(f"Need 0 < r_min < r_max, got ({r_min}, {r_max})")
    if points < 2:
        raise InvalidGridError(f"Need at least two radii, got {points}")
    return geometric_grid(r_min, r_max, points)

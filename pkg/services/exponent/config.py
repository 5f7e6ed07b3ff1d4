"""
Grids and tolerances for integrability exponents.
"""

from dataclasses import dataclass, field, replace

from django.conf import settings

from apps.core.exceptions import ConfigurationError


def _lab(key: str, default):
    return getattr(settings, "LAB", {}).get(key, default)


def _tolerance(key: str, default: float) -> float:
    return float(_lab("TOLERANCES", {}).get(key, default))


@dataclass(frozen=True)
class ExponentConfig:
    """
    Settings of the tail-slope and integral-scan estimators.

    The tail grid spans at least ``decades`` decades of |t|, starting where
    the sublevel radius is ``rho_fraction`` times the region radius. Without
    a pole in the region the fixed grid [t_floor, t_ceiling] is used.
    """

    decades: float = 3.0
    t_points: int = 12
    rho_fraction: float = 0.1
    rho_floor: float = 1e-12
    t_floor: float = 1e2
    t_ceiling: float = 1e5
    r_squared_min: float = 0.99
    widen_steps: int = 2
    c_max: float = 64.0
    bisection_width: float = 1e-3
    divergence_slope: float = 0.02
    cauchy_tolerance: float = 1e-3
    epsilon_floor: float = 1e-12
    scan_ratio: float = 2.0
    scan_nodes: int = 8
    angular_samples: int = field(default_factory=lambda: _lab("SCAN_ANGULAR_SAMPLES", 512))
    tolerance: float = field(default_factory=lambda: _tolerance("EXPONENT", 0.05))
    sigma: float = field(default_factory=lambda: _tolerance("SIGMA", 3.0))

    def __post_init__(self) -> None:
        if self.t_points < 3 or self.decades <= 0:
            raise ConfigurationError(
                f"Need t_points >= 3 and decades > 0, got {self.t_points}, {self.decades}"
            )
        if not 0 < self.rho_fraction < 1 or not 0 < self.epsilon_floor < 1:
            raise ConfigurationError("rho_fraction and epsilon_floor must lie in (0, 1)")
        if self.angular_samples < 2 or self.c_max <= 0 or self.bisection_width <= 0:
            raise ConfigurationError(
                "angular_samples must be >= 2, c_max and bisection_width positive"
            )

    def with_overrides(self, **changes) -> "ExponentConfig":
        return replace(self, **changes)

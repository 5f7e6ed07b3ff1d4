"""
Tail-slope estimator: fit log V(t) against log |t| as t -> -infinity.
"""

import logging
import math

import numpy as np
from numpy.typing import NDArray
from scipy.stats import linregress

from services.catalog import ModelFunction, PoleComponent, evaluate
from services.integrate import MCConfig

from .config import ExponentConfig
from .regions import CompactRegion
from .schemas import UNBOUNDED, SublevelEstimate, TailFit
from .sublevel import require_negative, sublevel_volumes

logger = logging.getLogger(__name__)

SUPER_POWER_FACTOR = 2.0
MIN_FIT_POINTS = 3


def anchor_pole(
    function: ModelFunction, region: CompactRegion
) -> PoleComponent | None:
    """First pole component that meets the region."""
    for component in function.poles():
        if region.gap(component.center_array, component.k) == 0:
            return component
    return None


def tail_levels(
    function: ModelFunction,
    region: CompactRegion,
    exponent_config: ExponentConfig,
    extra_decades: float = 0.0,
) -> NDArray[np.float64]:
    """
    Negative levels t_1 > t_2 > ... spanning the tail of f on the region.

    With a pole in the region the grid follows f along a ray leaving the
    pole, from distance ``rho_fraction * R`` inward until |t| has grown by
    ``decades`` decades or the distance reaches ``rho_floor * R``.
    """
    points = exponent_config.t_points
    component = anchor_pole(function, region)
    if component is None:
        low, high = exponent_config.t_floor, exponent_config.t_ceiling
        return -np.geomspace(low, high * 10**extra_decades, points)

    radius = region.radius
    decades = exponent_config.decades + extra_decades

    def value(rho: float) -> float:
        point = component.center_array.copy()
        point[0] += rho
        return evaluate(function, point)

    rho = exponent_config.rho_fraction * radius
    start = abs(value(rho))
    floor = exponent_config.rho_floor * radius
    end = start
    while end < start * 10**decades and rho > floor:
        rho = max(floor, rho / 10.0)
        end = abs(value(rho))
    if not (math.isfinite(end) and end > start):
        end = start * 10**decades
    return -np.geomspace(start, end, points)


def _local_slopes(levels: NDArray, volumes: NDArray) -> NDArray[np.float64]:
    x, y = np.log(np.abs(levels)), np.log(volumes)
    return np.diff(y) / np.diff(x)


def _fit(estimates: list[SublevelEstimate], levels: NDArray) -> TailFit:
    volumes = np.array([e.volume for e in estimates])
    t_range = (float(levels[0]), float(levels[-1]))
    positive = volumes > 0
    if not positive.any() or positive.sum() < MIN_FIT_POINTS:
        return TailFit(
            alpha=UNBOUNDED,
            t_range=t_range,
            accepted=True,
            volumes=estimates,
            message="sublevel sets are empty in the tail",
        )

    x = np.log(np.abs(levels[positive]))
    y = np.log(volumes[positive])
    slopes = np.abs(_local_slopes(levels[positive], volumes[positive]))
    if slopes[-1] > SUPER_POWER_FACTOR * max(slopes[0], 1e-12):
        return TailFit(
            alpha=UNBOUNDED,
            t_range=t_range,
            accepted=True,
            volumes=estimates,
            message="volumes decay faster than any power of |t|",
        )

    fit = linregress(x, y)
    return TailFit(
        alpha=float(-fit.slope),
        c_alpha=float(math.exp(fit.intercept)),
        r_squared=float(fit.rvalue**2),
        alpha_stderr=float(fit.stderr),
        t_range=t_range,
        accepted=False,
        volumes=estimates,
    )


def tail_exponent(
    function: ModelFunction,
    region: CompactRegion,
    config: MCConfig | None = None,
    exponent_config: ExponentConfig | None = None,
) -> TailFit:
    """
    Power-law exponent of the sublevel volumes, V(t) ~ C |t|^(-alpha).

    The grid is widened by a decade at a time, up to ``widen_steps``
    times, while the fit's R^2 stays below ``r_squared_min``.

    Raises:
        NotNegativeOnRegionError: If f is not negative near the region.

    Example:
        >>> from services.catalog import fundamental_solution
        >>> from services.hermitian import Setting
        >>> f = fundamental_solution(Setting(n=3, m=2))
        >>> round(tail_exponent(f, CompactRegion.ball([0, 0, 0], 0.5)).alpha, 6)
        6.0
    """
    config = config or MCConfig()
    exponent_config = exponent_config or ExponentConfig()
    require_negative(function, region)

    result = None
    for step in range(exponent_config.widen_steps + 1):
        levels = tail_levels(function, region, exponent_config, extra_decades=step)
        estimates = sublevel_volumes(function, region, levels, config, validate=False)
        result = _fit(estimates, levels)
        if result.alpha == UNBOUNDED:
            break
        accepted = result.r_squared >= exponent_config.r_squared_min
        result = result.model_copy(update={"accepted": accepted})
        if accepted:
            break
        logger.debug(
            f"Tail fit R^2={result.r_squared:.4f} below threshold, widening grid"
        )

    logger.info(f"Tail exponent {result.alpha} on {len(region.balls)} ball(s)")
    return result

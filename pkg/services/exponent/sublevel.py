"""
Volumes of sublevel sets {f <= t} inside compact regions.

Single-pole radial and cylindrical profiles over one ball have closed
forms (ball-ball lens and tube-in-ball volumes through the regularized
incomplete beta function). Everything else is estimated by Monte Carlo,
mixing uniform draws over the region with radial power-law draws toward
each isolated pole so that small sublevel sets still collect hits.
"""

import logging
import math

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.special import beta, betainc

from services.catalog import ModelFunction, PoleComponent, ProfileKind, ScaledSum
from services.catalog.functions import _ProfileFunction
from services.integrate import MCConfig, ball_sup
from services.integrate.sampling import (
    antithetic_directions,
    ball_volume,
    sphere_area,
    to_complex,
)

from .exceptions import NotNegativeOnRegionError
from .regions import CompactRegion
from .schemas import SublevelEstimate, VolumeMethod

logger = logging.getLogger(__name__)

UNIFORM_SHARE = 0.25
POLE_EXPONENT_GAP = 0.5
SUBLEVEL_BATCHES = 4
NEIGHBORHOOD = 1.01
AXIS_TOLERANCE = 1e-12


def require_negative(function: ModelFunction, region: CompactRegion) -> None:
    """
    Raises:
        NotNegativeOnRegionError: If sup f >= 0 on a slightly enlarged ball.
    """
    for center, radius in region.balls:
        top = ball_sup(function, np.asarray(center), radius * NEIGHBORHOOD).value
        if not top < 0:
            raise NotNegativeOnRegionError(
                f"sup f = {top:.6g} on the ball of radius {radius:.3g} about {center}"
            )


def single_profile(function: ModelFunction) -> tuple[float, _ProfileFunction] | None:
    """(c, g) when f = c g(|w|^2) with c > 0 and a single profile term."""
    if isinstance(function, _ProfileFunction):
        return 1.0, function
    if isinstance(function, ScaledSum):
        active = [(c, f) for c, f in function.terms if c > 0]
        if len(active) == 1:
            inner = single_profile(active[0][1])
            if inner is not None:
                return active[0][0] * inner[0], inner[1]
    return None


def profile_threshold(function: _ProfileFunction, level: float) -> float | None:
    """
    Largest squared block radius with g <= level, for increasing profiles.

    Returns None when the profile is not increasing.
    """
    profile = function.profile
    if not profile.increasing:
        return None
    if profile.kind is ProfileKind.POWER:
        return math.inf if level >= 0 else (-level) ** (-1.0 / profile.s)
    if profile.kind is ProfileKind.LOG:
        return math.exp(level) if level < 700 else math.inf
    if profile.c1 == 0:
        return math.inf if profile.c0 <= level else 0.0
    return max(0.0, (level - profile.c0) / profile.c1)


def _cap(real_dim: int, radius: float, x: float) -> float:
    """Volume of the part of a ball beyond a hyperplane at signed distance x."""
    whole = ball_volume(real_dim, radius)
    if x >= radius:
        return 0.0
    if x <= -radius:
        return whole
    if x < 0:
        return whole - _cap(real_dim, radius, -x)
    fraction = 1.0 - (x / radius) ** 2
    return 0.5 * whole * float(betainc(0.5 * (real_dim + 1), 0.5, fraction))


def lens_volume(real_dim: int, radius: float, rho: float, distance: float) -> float:
    """
    Volume of the intersection of two balls, given radii and center distance.

    Example:
        >>> round(lens_volume(2, 1.0, 1.0, 0.0), 12) == round(math.pi, 12)
        True
    """
    if rho <= 0 or distance >= radius + rho:
        return 0.0
    if distance <= abs(radius - rho):
        return ball_volume(real_dim, min(radius, rho))
    near = (distance**2 + radius**2 - rho**2) / (2.0 * distance)
    return _cap(real_dim, radius, near) + _cap(real_dim, rho, distance - near)


def tube_volume(n: int, k: int, radius: float, rho: float) -> float:
    """
    Volume of {|w| <= rho} inside a ball of C^n centered on the tube axis,
    w the first k coordinates.
    """
    if rho <= 0:
        return 0.0
    x = min(1.0, (rho / radius) ** 2)
    sphere = sphere_area(k, 1.0)
    fiber = ball_volume(2 * (n - k), 1.0) if k < n else 1.0
    return (
        0.5 * sphere * fiber * radius ** (2 * n)
        * float(beta(k, n - k + 1) * betainc(k, n - k + 1, x))
    )


def _closed_form(
    function: ModelFunction, region: CompactRegion, t: float
) -> float | None:
    if not region.is_ball:
        return None
    single = single_profile(function)
    if single is None:
        return None
    scale, term = single
    threshold = profile_threshold(term, t / scale)
    if threshold is None:
        return None
    rho = math.sqrt(threshold) if math.isfinite(threshold) else math.inf
    (center, radius), n, k = region.balls[0], term.dim, term.block
    offset = np.asarray(center) - np.asarray(term.center)
    if not math.isfinite(rho):
        return ball_volume(2 * n, radius)
    if k == n:
        return lens_volume(2 * n, radius, rho, float(np.linalg.norm(offset)))
    if np.linalg.norm(offset[:k]) > AXIS_TOLERANCE * max(1.0, radius):
        return None
    return tube_volume(n, k, radius, rho)


def _pole_proposals(
    function: ModelFunction, region: CompactRegion
) -> list[tuple[PoleComponent, float]]:
    """Isolated poles inside the region with the radius their draws must cover."""
    return [
        (component, region.reach(component.center_array))
        for component in function.poles()
        if component.is_point and region.gap(component.center_array) == 0
    ]


def _pole_density(
    points: NDArray, component: PoleComponent, reach: float, real_dim: int
) -> NDArray[np.float64]:
    power = real_dim - POLE_EXPONENT_GAP
    sphere = sphere_area(real_dim // 2, 1.0)
    r = np.linalg.norm(points - component.center_array, axis=-1)
    with np.errstate(divide="ignore"):
        scale = POLE_EXPONENT_GAP / (sphere * reach**POLE_EXPONENT_GAP)
        density = scale * r**-power
    return np.where(r <= reach, density, 0.0)


def _draw_near_pole(
    rng: np.random.Generator,
    component: PoleComponent,
    reach: float,
    real_dim: int,
    count: int,
) -> NDArray[np.complex128]:
    directions = antithetic_directions(rng, (count + 1) // 2, real_dim)[:count]
    radii = reach * rng.random(count) ** (1.0 / POLE_EXPONENT_GAP)
    return component.center_array + to_complex(directions * radii[:, None])


def _monte_carlo(
    function: ModelFunction,
    region: CompactRegion,
    levels: NDArray[np.float64],
    config: MCConfig,
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Volumes and stderrs for every level from one shared batch of draws."""
    real_dim = 2 * region.dim
    proposals = _pole_proposals(function, region)
    total = config.samples_per_shell * SUBLEVEL_BATCHES
    share = UNIFORM_SHARE if proposals else 1.0
    counts = [int(round(share * total))]
    counts += [int((total - counts[0]) // len(proposals))] * len(proposals)
    drawn = sum(counts)
    volume_sum = float(sum(ball_volume(real_dim, r) for r in region.radii))

    sums = np.zeros(levels.size)
    squares = np.zeros(levels.size)
    for source, count in enumerate(counts):
        rng = config.stream("sublevel", source)
        done = 0
        while done < count:
            size = min(config.chunk_size, count - done)
            if source == 0:
                points, _ = region.sample_uniform(rng, size)
            else:
                component, reach = proposals[source - 1]
                points = _draw_near_pole(rng, component, reach, real_dim, size)
            density = counts[0] / drawn * region.coverage(points) / volume_sum
            for (component, reach), c in zip(proposals, counts[1:], strict=True):
                near = _pole_density(points, component, reach, real_dim)
                density = density + c / drawn * near
            inside = region.contains(points)
            values = function.values(points)
            with np.errstate(divide="ignore", invalid="ignore"):
                weight = np.where(inside, 1.0 / density, 0.0)
            hits = (values[None, :] <= levels[:, None]) * weight[None, :]
            sums += hits.sum(axis=1)
            squares += (hits**2).sum(axis=1)
            done += size

    mean = sums / drawn
    variance = np.maximum(squares / drawn - mean**2, 0.0)
    return mean, np.sqrt(variance / drawn)


def sublevel_volumes(
    function: ModelFunction,
    region: CompactRegion,
    levels: ArrayLike,
    config: MCConfig | None = None,
    validate: bool = True,
) -> list[SublevelEstimate]:
    """
    Volumes of {f <= t} inside the region for a batch of levels.

    Monte-Carlo volumes share one set of draws, so they are nonincreasing
    in |t| across the batch.

    Raises:
        NotNegativeOnRegionError: When ``validate`` and f is not negative near K.
    """
    config = config or MCConfig()
    if validate:
        require_negative(function, region)
    levels = np.asarray(levels, dtype=np.float64).reshape(-1)
    results: list[SublevelEstimate | None] = [None] * levels.size
    pending = []
    for index, t in enumerate(levels):
        if t >= 0:
            results[index] = SublevelEstimate(
                t=float(t),
                volume=region.volume,
                method=VolumeMethod.CLOSED_FORM,
                degenerate=True,
            )
            continue
        volume = _closed_form(function, region, float(t))
        if volume is None:
            pending.append(index)
        else:
            results[index] = SublevelEstimate(
                t=float(t), volume=volume, method=VolumeMethod.CLOSED_FORM
            )

    if pending:
        means, stderrs = _monte_carlo(function, region, levels[pending], config)
        for index, mean, stderr in zip(pending, means, stderrs, strict=True):
            results[index] = SublevelEstimate(
                t=float(levels[index]),
                volume=float(mean),
                stderr=float(stderr),
                method=VolumeMethod.MONTE_CARLO,
            )
        logger.debug(f"Sampled sublevel volumes at {len(pending)} levels")
    return [r for r in results if r is not None]


def sublevel_volume(
    function: ModelFunction,
    region: CompactRegion,
    t: float,
    config: MCConfig | None = None,
    validate: bool = True,
) -> SublevelEstimate:
    """
    Volume of {f <= t} inside the region.

    For t >= 0 the whole region volume is returned with ``degenerate`` set.

    Example:
        >>> from services.catalog import fundamental_solution
        >>> from services.hermitian import Setting
        >>> f = fundamental_solution(Setting(n=2, m=1))
        >>> estimate = sublevel_volume(f, CompactRegion.ball([0, 0], 0.5), -100.0)
        >>> round(estimate.volume / (math.pi**2 / 2 * 0.01**2), 9)
        1.0
    """
    return sublevel_volumes(function, region, [t], config, validate)[0]

"""
Mean-value and supremum growth characterizations of Lelong numbers.

Sphere means, ball means and ball suprema are compared with the radial
weight phi_m(r); their limits at r -> 0 measure the Lelong number up to a
constant kappa that is calibrated once on the fundamental solution.
"""

import logging
import math
from functools import lru_cache

import numpy as np
from numpy.typing import ArrayLike, NDArray

from apps.core.exceptions import ComputationError
from services.catalog import (
    ModelFunction,
    as_point,
    closed_current,
    evaluate,
    fundamental_solution,
)
from services.hermitian import Setting
from services.integrate import (
    Estimate,
    InvalidRegionError,
    MCConfig,
    ball_current_mass,
    ball_mean,
    ball_sup,
    sphere_mean,
)
from services.integrate.sampling import geometric_edges, shell_quadrature

from .config import LelongConfig, radius_grid
from .exceptions import NotNegativeError
from .profiles import _combined_method, estimate_from_profile, lelong_number
from .schemas import (
    DOES_NOT_CONVERGE,
    GreenIdentityReport,
    LelongEstimate,
    LelongMap,
    LelongMapEntry,
    LelongMethod,
    LelongProfile,
    MeanValueReport,
    SubMeanValueReport,
    SupGrowthReport,
    point_reals,
)

logger = logging.getLogger(__name__)

GREEN_RATIO = 1.5
GREEN_NODES = 8
USC_STEPS = 3


def radial_weight(setting: Setting, r: ArrayLike) -> NDArray[np.float64]:
    """phi_m(r) = -(1/s) r^(-2s), vectorized."""
    s = setting.power
    return -np.power(np.asarray(r, dtype=np.float64), -2.0 * s) / s


def convexity(
    x: ArrayLike, y: ArrayLike, stderrs: ArrayLike, tolerance: float, sigma: float
) -> tuple[bool, float]:
    """
    Discrete convexity of y as a function of increasing x.

    Consecutive divided-difference slopes must not decrease by more than
    ``tolerance`` times the slope scale plus ``sigma`` times their noise.

    Returns:
        (convex, smallest normalized slope increment).
    """
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    stderrs = np.asarray(stderrs, dtype=np.float64)
    if x.size < 3:
        return True, 0.0
    dx = np.diff(x)
    slopes = np.diff(y) / dx
    noise = (stderrs[:-1] + stderrs[1:]) / dx
    scale = max(float(np.max(np.abs(slopes))), 1e-300)
    increments = (np.diff(slopes) + sigma * (noise[:-1] + noise[1:])) / scale
    smallest = float(np.min(increments))
    return smallest >= -tolerance, smallest


def _working_shift(function: ModelFunction, a: NDArray, r_max: float) -> float:
    """Constant subtracted so the function is negative on B(a, r_max)."""
    top = ball_sup(function, a, r_max).value
    if not math.isfinite(top):
        raise NotNegativeError(f"Supremum over B(a, {r_max:.3g}) is {top}")
    return top + 1.0 if top >= 0 else 0.0


def _ratio_profile(
    center: NDArray,
    radii: NDArray,
    estimates: list[Estimate],
    weights: NDArray,
    shift: float,
) -> LelongProfile:
    return LelongProfile(
        center=point_reals(center),
        exponent=0.0,
        radii=radii.tolist(),
        values=[(e.value - shift) / w for e, w in zip(estimates, weights, strict=True)],
        stderrs=[e.stderr / abs(w) for e, w in zip(estimates, weights, strict=True)],
        method=_combined_method({e.method for e in estimates}),
    )


def _sphere_means(function, a, radii, config) -> list[Estimate]:
    return [
        sphere_mean(function, a, float(r), config, shard=index)
        for index, r in enumerate(radii)
    ]


@lru_cache(maxsize=16)
def _calibration(setting: Setting, config: MCConfig, lelong_config: LelongConfig) -> float:
    fund = fundamental_solution(setting)
    origin = np.zeros(setting.n, dtype=np.complex128)
    estimate, _ = lelong_number(closed_current(setting, fund), origin, config, lelong_config)
    radii = lelong_config.fit_radii()
    profile = _ratio_profile(
        origin,
        radii,
        _sphere_means(fund, origin, radii, config),
        radial_weight(setting, radii),
        0.0,
    )
    sphere = estimate_from_profile(profile, LelongMethod.SPHERE_MEAN, lelong_config)
    if not (estimate.converged and sphere.converged) or sphere.nu == 0:
        raise ComputationError("Calibration on the fundamental solution did not converge")
    kappa = float(estimate.nu) / float(sphere.nu)
    logger.info(f"Calibration constant for (n={setting.n}, m={setting.m}): {kappa:.12g}")
    return kappa


def calibration_constant(
    setting: Setting,
    config: MCConfig | None = None,
    lelong_config: LelongConfig | None = None,
) -> float:
    """
    kappa = nu(dd^c phi_m, 0) / lim lambda(phi_m, 0, r) / phi_m(r).

    Raises:
        ComputationError: If either limit fails to converge.

    Example:
        >>> round(calibration_constant(Setting(n=3, m=2)), 9)
        1.0
    """
    return _calibration(setting, config or MCConfig(), lelong_config or LelongConfig())


def _calibrated(kappa: float, estimate: LelongEstimate) -> float | None:
    return kappa * float(estimate.nu) if estimate.converged else None


def mean_value_ratios(
    setting: Setting,
    function: ModelFunction,
    a: ArrayLike,
    config: MCConfig | None = None,
    lelong_config: LelongConfig | None = None,
    kappa: float | None = None,
) -> MeanValueReport:
    """
    Limits of lambda / phi_m and Lambda / phi_m at r -> 0.

    The function is shifted by a constant when needed so that it is
    negative on the working ball; neither limit changes. Sphere means are
    taken on the full grid (for the convexity check); ball means on the
    fit window only.

    Args:
        setting: Active (n, m).
        function: Model function.
        a: Center.
        config: Integrator configuration.
        lelong_config: Grid and tolerances.
        kappa: Calibration constant; computed when omitted.

    Returns:
        Report with both limits, their ratio and the calibrated number.

    Raises:
        NotNegativeError: If no constant shift makes the function negative.
    """
    config = config or MCConfig()
    lelong_config = lelong_config or LelongConfig()
    kappa = calibration_constant(setting, config, lelong_config) if kappa is None else kappa
    center = as_point(a, setting.n)
    shift = _working_shift(function, center, lelong_config.r_max)

    radii = lelong_config.radii()
    weights = radial_weight(setting, radii)
    spheres = _sphere_means(function, center, radii, config)
    sphere_profile = _ratio_profile(center, radii, spheres, weights, shift)
    sphere_limit = estimate_from_profile(
        sphere_profile, LelongMethod.SPHERE_MEAN, lelong_config
    )

    fit = radii[: lelong_config.fit_points]
    balls = [ball_mean(function, center, float(r), config) for r in fit]
    ball_profile = _ratio_profile(center, fit, balls, weights[: fit.size], shift)
    ball_limit = estimate_from_profile(ball_profile, LelongMethod.BALL_MEAN, lelong_config)

    ratio = None
    if sphere_limit.converged and ball_limit.converged:
        floor = max(lelong_config.lelong_tolerance, lelong_config.sigma * sphere_limit.stderr)
        if float(sphere_limit.nu) > floor:
            ratio = float(ball_limit.nu) / float(sphere_limit.nu)

    convex, smallest = convexity(
        weights,
        [e.value for e in spheres],
        [e.stderr for e in spheres],
        lelong_config.convexity_tolerance,
        lelong_config.sigma,
    )
    return MeanValueReport(
        center=point_reals(center),
        shift=shift,
        sphere_limit=sphere_limit,
        ball_limit=ball_limit,
        ratio=ratio,
        expected_ratio=setting.ratio_law,
        kappa=kappa,
        calibrated_nu=_calibrated(kappa, sphere_limit),
        sphere_convex=convex,
        min_second_difference=smallest,
    )


def sup_growth(
    setting: Setting,
    function: ModelFunction,
    a: ArrayLike,
    config: MCConfig | None = None,
    lelong_config: LelongConfig | None = None,
    kappa: float | None = None,
) -> SupGrowthReport:
    """
    Limit of M(r) / phi_m(r) at r -> 0, with M the supremum over B(a, r).

    Also checks that M is convex in the phi_m(r) coordinate.

    Example:
        >>> setting = Setting(n=3, m=2)
        >>> report = sup_growth(setting, fundamental_solution(setting), [0, 0, 0])
        >>> round(report.limit.nu, 9), report.convex
        (1.0, True)
    """
    config = config or MCConfig()
    lelong_config = lelong_config or LelongConfig()
    kappa = calibration_constant(setting, config, lelong_config) if kappa is None else kappa
    center = as_point(a, setting.n)
    shift = _working_shift(function, center, lelong_config.r_max)

    radii = lelong_config.radii()
    weights = radial_weight(setting, radii)
    sups = [ball_sup(function, center, float(r), config) for r in radii]
    profile = _ratio_profile(center, radii, sups, weights, shift)
    limit = estimate_from_profile(profile, LelongMethod.SUP_GROWTH, lelong_config)
    convex, smallest = convexity(
        weights,
        [e.value for e in sups],
        np.zeros(len(sups)),
        lelong_config.convexity_tolerance,
        lelong_config.sigma,
    )
    return SupGrowthReport(
        center=point_reals(center),
        limit=limit,
        kappa=kappa,
        calibrated=_calibrated(kappa, limit),
        convex=convex,
        min_second_difference=smallest,
        lower_bound=any(e.lower_bound for e in sups),
    )


def green_identity(
    setting: Setting,
    function: ModelFunction,
    a: ArrayLike,
    r1: float,
    r2: float,
    config: MCConfig | None = None,
) -> GreenIdentityReport:
    """
    Compare lambda(r2) - lambda(r1) with the integral of nu(dd^c f, a, rho)
    against d phi_m(rho) over [r1, r2].

    The measured proportionality constant is reported, not assumed.

    Raises:
        InvalidRegionError: Unless 0 < r1 < r2.
    """
    if not 0 < r1 < r2:
        raise InvalidRegionError(f"Need 0 < r1 < r2, got r1={r1}, r2={r2}")
    config = config or MCConfig()
    center = as_point(a, setting.n)
    difference = sphere_mean(function, center, r2, config, shard=1) - sphere_mean(
        function, center, r1, config, shard=0
    )

    current = closed_current(setting, function)
    exponent = current.lelong_exponent
    s = setting.power
    rho, weights = shell_quadrature(geometric_edges(r1, r2, GREEN_RATIO), GREEN_NODES)
    terms, variances = [], []
    for r, w in zip(rho, weights, strict=True):
        mass = ball_current_mass(current, center, float(r), config)
        factor = float(w) * 2.0 * float(r) ** (-2.0 * s - 1.0) / float(r) ** exponent
        terms.append(factor * mass.value)
        variances.append((factor * mass.stderr) ** 2)
    integral = math.fsum(terms)

    constant = difference.value / integral if integral != 0 else None
    stderr = math.sqrt(difference.stderr**2 + math.fsum(variances))
    if constant is not None:
        stderr /= abs(integral)
    return GreenIdentityReport(
        r1=r1,
        r2=r2,
        sphere_difference=difference.value,
        lelong_integral=integral,
        constant=constant,
        stderr=stderr,
    )


def lower_bound_at_finite_points(
    function: ModelFunction,
    a: ArrayLike,
    config: MCConfig | None = None,
    lelong_config: LelongConfig | None = None,
) -> SubMeanValueReport:
    """
    Sub-mean-value check lambda(f, a, r) >= f(a) on the grid, when f(a) is finite.
    """
    config = config or MCConfig()
    lelong_config = lelong_config or LelongConfig()
    center = as_point(a, function.dim)
    value = evaluate(function, center)
    if not math.isfinite(value):
        return SubMeanValueReport(
            center=point_reals(center),
            value=None,
            applicable=False,
            satisfied=True,
            min_margin=None,
        )
    radii = lelong_config.radii()
    margins = [
        e.value - value + lelong_config.sigma * e.stderr
        for e in _sphere_means(function, center, radii, config)
    ]
    smallest = min(margins)
    return SubMeanValueReport(
        center=point_reals(center),
        value=value,
        applicable=True,
        satisfied=smallest >= -1e-12 * max(1.0, abs(value)),
        min_margin=smallest,
    )


def _pole_distance(function: ModelFunction, point: NDArray) -> float:
    distances = [float(component.distance(point)) for component in function.poles()]
    return min(distances) if distances else math.inf


def _map_value(
    setting: Setting,
    function: ModelFunction,
    point: NDArray,
    config: MCConfig,
    lelong_config: LelongConfig,
    kappa: float,
) -> LelongMapEntry:
    distance = _pole_distance(function, point)
    r_max = lelong_config.r_max if distance == 0 else min(lelong_config.r_max, distance / 2)
    r_min = min(lelong_config.r_min, r_max / 10.0)
    radii = radius_grid(r_min, r_max, lelong_config.points)[: lelong_config.fit_points]
    profile = _ratio_profile(
        point,
        radii,
        _sphere_means(function, point, radii, config),
        radial_weight(setting, radii),
        0.0,
    )
    estimate = estimate_from_profile(profile, LelongMethod.SPHERE_MEAN, lelong_config)
    nu = _calibrated(kappa, estimate)
    return LelongMapEntry(
        point=point_reals(point),
        nu=DOES_NOT_CONVERGE if nu is None else nu,
        stderr=kappa * estimate.stderr,
    )


def _spot_points(function: ModelFunction, points: list[NDArray]) -> list[int]:
    """Indices of pole points and of their nearest grid neighbors."""
    spots: set[int] = set()
    for index, point in enumerate(points):
        if _pole_distance(function, point) != 0:
            continue
        spots.add(index)
        gaps = [float(np.linalg.norm(other - point)) for other in points]
        positive = [g for g in gaps if g > 0]
        if positive:
            nearest = min(positive)
            spots.update(i for i, g in enumerate(gaps) if 0 < g <= nearest * (1 + 1e-9))
    return sorted(spots)


def lelong_map(
    setting: Setting,
    function: ModelFunction,
    points: list[ArrayLike],
    config: MCConfig | None = None,
    lelong_config: LelongConfig | None = None,
    kappa: float | None = None,
) -> LelongMap:
    """
    Calibrated sphere-mean Lelong numbers on a set of points.

    Off the pole set the working radius is half the distance to the nearest
    pole. The upper-semicontinuity spot check approaches every pole point and
    its nearest grid neighbors along the first real axis with steps h/2,
    h/4, h/8 (h the grid spacing) and requires the approaching values not to
    exceed the value at the limit point beyond the tolerance.

    Example:
        >>> setting = Setting(n=2, m=1)
        >>> grid = [[0, 0], [0.1, 0], [0.2, 0]]
        >>> result = lelong_map(setting, fundamental_solution(setting), grid)
        >>> [round(e.nu, 6) for e in result.entries], result.usc_holds
        ([1.0, 0.0, 0.0], True)
    """
    config = config or MCConfig()
    lelong_config = lelong_config or LelongConfig()
    kappa = calibration_constant(setting, config, lelong_config) if kappa is None else kappa
    grid = [as_point(p, setting.n) for p in points]
    entries = [
        _map_value(setting, function, p, config, lelong_config, kappa) for p in grid
    ]

    violations: list[str] = []
    spacing = min(
        (
            float(np.linalg.norm(p - q))
            for i, p in enumerate(grid)
            for q in grid[i + 1 :]
            if float(np.linalg.norm(p - q)) > 0
        ),
        default=lelong_config.r_max,
    )
    step = np.zeros(setting.n, dtype=np.complex128)
    step[0] = 1.0
    for index in _spot_points(function, grid):
        base = entries[index]
        if not isinstance(base.nu, float):
            continue
        for k in range(1, USC_STEPS + 1):
            near = grid[index] + spacing * 2.0**-k * step
            probe = _map_value(setting, function, near, config, lelong_config, kappa)
            if not isinstance(probe.nu, float):
                continue
            allowance = lelong_config.usc_tolerance + lelong_config.sigma * math.hypot(
                base.stderr, probe.stderr
            )
            if probe.nu > base.nu + allowance:
                violations.append(
                    f"nu={probe.nu:.6g} at {probe.point} exceeds nu={base.nu:.6g} "
                    f"at {base.point}"
                )
    if violations:
        logger.warning(f"Upper-semicontinuity spot check failed at {len(violations)} probes")
    return LelongMap(
        entries=entries,
        kappa=kappa,
        usc_holds=not violations,
        usc_violations=violations,
    )


__all__ = [
    "calibration_constant",
    "convexity",
    "green_identity",
    "lelong_map",
    "lower_bound_at_finite_points",
    "mean_value_ratios",
    "radial_weight",
    "sup_growth",
]

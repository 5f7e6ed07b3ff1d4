"""
m-Lelong functions and Lelong numbers of simple currents.
"""

import csv
import logging
from typing import TextIO

import numpy as np
from numpy.typing import ArrayLike

from apps.core.utils import format_number
from services.catalog import SimpleCurrent, as_point, certified_m_positive
from services.integrate import EstimateMethod, MCConfig, ball_current_mass

from .config import LelongConfig, radius_grid
from .extrapolation import extrapolate
from .schemas import LelongEstimate, LelongMethod, LelongProfile, point_reals

logger = logging.getLogger(__name__)

PROFILE_COLUMNS = ("r", "nu", "stderr", "method")


def _combined_method(methods: set[EstimateMethod]) -> EstimateMethod:
    if EstimateMethod.MONTE_CARLO in methods:
        return EstimateMethod.MONTE_CARLO
    if EstimateMethod.RADIAL_QUADRATURE in methods:
        return EstimateMethod.RADIAL_QUADRATURE
    return EstimateMethod.CLOSED_FORM


def lelong_function(
    current: SimpleCurrent,
    a: ArrayLike,
    r_min: float,
    r_max: float,
    points: int,
    config: MCConfig | None = None,
) -> LelongProfile:
    """
    The m-Lelong function r -> mass(T ^ beta^p, B(a, r)) / r^((2n/m)(m+p-n)).

    Args:
        current: Simple current with m + p >= n.
        a: Center.
        r_min: Smallest radius.
        r_max: Largest radius.
        points: Number of geometric grid radii.
        config: Integrator configuration.

    Returns:
        The profile on the grid.

    Raises:
        BidimensionError: If m + p < n.
        InvalidGridError: For a malformed grid.

    Example:
        >>> from services.catalog import closed_current, fundamental_solution
        >>> from services.hermitian import Setting
        >>> setting = Setting(n=3, m=2)
        >>> current = closed_current(setting, fundamental_solution(setting))
        >>> profile = lelong_function(current, [0, 0, 0], 1e-3, 0.5, 4)
        >>> [round(v, 9) for v in profile.values]
        [1.0, 1.0, 1.0, 1.0]
    """
    current.require_lelong()
    config = config or MCConfig()
    center = as_point(a, current.setting.n)
    radii = radius_grid(r_min, r_max, points)
    exponent = current.lelong_exponent

    values, stderrs, methods, atom = [], [], set(), 0.0
    for r in radii:
        estimate = ball_current_mass(current, center, float(r), config)
        scale = float(r) ** exponent
        values.append(estimate.value / scale)
        stderrs.append(estimate.stderr / scale)
        methods.add(estimate.method)
        atom = estimate.atom

    logger.debug(
        f"Lelong function on [{r_min:.3g}, {r_max:.3g}] ({points} radii, "
        f"exponent {exponent:.6g}): {values[0]:.12g} .. {values[-1]:.12g}"
    )
    return LelongProfile(
        center=point_reals(center),
        exponent=exponent,
        radii=radii.tolist(),
        values=values,
        stderrs=stderrs,
        method=_combined_method(methods),
        atom=atom,
    )


def estimate_from_profile(
    profile: LelongProfile,
    method: LelongMethod,
    lelong_config: LelongConfig,
    check_monotone: bool = False,
) -> LelongEstimate:
    """Extrapolate a ratio profile over its smallest radii."""
    window = slice(0, lelong_config.fit_points)
    nu, stderr, diagnostics = extrapolate(
        profile.radii[window],
        profile.values[window],
        profile.stderrs[window],
        lelong_config.sigma,
    )
    monotone = profile.is_nondecreasing(lelong_config.sigma) if check_monotone else None
    return LelongEstimate(
        nu=nu,
        stderr=stderr,
        method=method,
        diagnostics=diagnostics,
        monotone=monotone,
    )


def lelong_number(
    current: SimpleCurrent,
    a: ArrayLike,
    config: MCConfig | None = None,
    lelong_config: LelongConfig | None = None,
    certified: bool | None = None,
) -> tuple[LelongEstimate, LelongProfile]:
    """
    The Lelong number nu_T(a) = lim nu_T(a, r) as r -> 0.

    Args:
        current: Simple current.
        a: Center.
        config: Integrator configuration.
        lelong_config: Grid and tolerances.
        certified: Whether T is known m-positive and m-sh; detected from the
            factors when omitted. Certified profiles are checked for
            monotonicity.

    Returns:
        (estimate, profile). The estimate carries "does-not-converge" when the
        profile has no limit.
    """
    lelong_config = lelong_config or LelongConfig()
    if certified is None:
        certified = certified_m_positive(current)
    profile = lelong_function(
        current,
        a,
        lelong_config.r_min,
        lelong_config.r_max,
        lelong_config.points,
        config,
    )
    estimate = estimate_from_profile(
        profile, LelongMethod.DEFINITION, lelong_config, check_monotone=certified
    )
    if estimate.monotone is False:
        logger.warning("Certified m-positive profile is not nondecreasing")
    return estimate, profile


def write_profile_csv(profile: LelongProfile, stream: TextIO) -> None:
    """
    Write a profile as CSV with columns r, nu, stderr, method.

    Numbers are written at 17 significant digits.
    """
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(PROFILE_COLUMNS)
    for r, value, stderr, method in profile.rows():
        writer.writerow([format_number(r), format_number(value), format_number(stderr), method])


def profile_ratio(profile: LelongProfile, weights: ArrayLike) -> np.ndarray:
    """Profile values multiplied pointwise by ``weights``."""
    return np.asarray(profile.values) * np.asarray(weights, dtype=np.float64)

"""
Bounds on integrability exponents in terms of Lelong numbers, and the
Chebyshev-Markov bound linking sublevel volumes to integrals of |f|^alpha.
"""

import logging

import numpy as np
from numpy.typing import ArrayLike

from services.catalog import ModelFunction, as_point, closed_current
from services.hermitian import Setting
from services.integrate import MCConfig
from services.lelong import LelongConfig, lelong_number
from services.lelong.schemas import point_reals

from .config import ExponentConfig
from .regions import CompactRegion
from .scan import integrability_exponent, power_integral
from .schemas import BoundsReport, MarkovReport
from .sublevel import require_negative, sublevel_volumes
from .tail import tail_levels

logger = logging.getLogger(__name__)

BOUNDS_RADIUS = 0.25
LOWER_SLACK = 1e-6


def _local_radius(function: ModelFunction, a: ArrayLike, radius: float) -> float:
    """Keep the local ball clear of pole components not through a."""
    others = [float(c.distance(a)) for c in function.poles()]
    others = [d for d in others if d > 0]
    return min([radius] + [0.5 * d for d in others])


def bounds_report(
    setting: Setting,
    function: ModelFunction,
    a: ArrayLike,
    config: MCConfig | None = None,
    lelong_config: LelongConfig | None = None,
    exponent_config: ExponentConfig | None = None,
) -> BoundsReport:
    """
    Check n/(n-m) <= iota_a(f), and iota_a(f) <= nm/(n-m) when nu(dd^c f, a) > 0.

    The upper bound only applies when the Lelong number clearly exceeds its
    error. For m = 1 the exponent must also equal n/(n-1).

    Example:
        >>> from services.catalog import fundamental_solution
        >>> setting = Setting(n=2, m=1)
        >>> report = bounds_report(setting, fundamental_solution(setting), [0, 0])
        >>> report.lower_holds, report.upper_applicable, report.upper_holds
        (True, True, True)
    """
    config = config or MCConfig()
    lelong_config = lelong_config or LelongConfig()
    exponent_config = exponent_config or ExponentConfig()
    a = as_point(a, setting.n)

    region = CompactRegion.ball(a, _local_radius(function, a, BOUNDS_RADIUS))
    estimate = integrability_exponent(function, region, config, exponent_config)
    nu, _ = lelong_number(
        closed_current(setting, function), a, config, lelong_config
    )

    tolerance = exponent_config.tolerance
    lower, upper = setting.exponent_lower, setting.exponent_upper
    lower_holds = not estimate.bounded or (
        float(estimate.iota) >= lower * (1.0 - LOWER_SLACK)
    )
    if estimate.bounded and estimate.interval is not None:
        lower_holds = lower_holds or estimate.interval[1] >= lower

    threshold = max(exponent_config.sigma * nu.stderr, lelong_config.lelong_tolerance)
    applicable = nu.converged and float(nu.nu) > threshold
    upper_holds = None
    if applicable:
        upper_holds = estimate.bounded and float(estimate.iota) <= upper * (
            1.0 + tolerance
        )

    m1_identity = None
    if setting.m == 1 and applicable:
        m1_identity = estimate.bounded and abs(float(estimate.iota) - lower) <= (
            tolerance * lower
        )

    report = BoundsReport(
        center=point_reals(a),
        iota=estimate,
        nu=nu.nu,
        nu_stderr=nu.stderr,
        lower=lower,
        lower_holds=lower_holds,
        upper=upper,
        upper_applicable=applicable,
        upper_holds=upper_holds,
        m1_identity=m1_identity,
    )
    logger.info(
        f"Exponent bounds at {report.center}: iota={estimate.iota}, nu={nu.nu}, "
        f"holds={report.holds}"
    )
    return report


def markov_bound(
    function: ModelFunction,
    region: CompactRegion,
    alpha: float,
    config: MCConfig | None = None,
    exponent_config: ExponentConfig | None = None,
) -> MarkovReport:
    """
    Check V(t) |t|^alpha <= integral over K of |f|^alpha on the tail grid.

    Not applicable when the integral of |f|^alpha does not converge.
    """
    config = config or MCConfig()
    exponent_config = exponent_config or ExponentConfig()
    require_negative(function, region)

    integral, converged = power_integral(
        function, region, alpha, config, exponent_config
    )
    levels = tail_levels(function, region, exponent_config)
    estimates = sublevel_volumes(function, region, levels, config, validate=False)
    scaled = [
        (e.t, e.volume * abs(e.t) ** alpha, e.stderr * abs(e.t) ** alpha)
        for e in estimates
    ]
    rows = [(t, value) for t, value, _ in scaled]
    if not converged:
        return MarkovReport(
            alpha=alpha, integral=None, rows=rows, applicable=False, holds=None
        )

    slack = integral * (1.0 + exponent_config.tolerance)
    holds = all(
        value <= slack + exponent_config.sigma * stderr for _, value, stderr in scaled
    )
    logger.debug(
        f"Markov bound at alpha={alpha}: max {np.max([v for _, v in rows]):.6g} "
        f"against {integral:.6g}"
    )
    return MarkovReport(
        alpha=alpha, integral=integral, rows=rows, applicable=True, holds=holds
    )

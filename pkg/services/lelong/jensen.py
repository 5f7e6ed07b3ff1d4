"""
Lelong-Jensen identity and the analysis of negative currents.

For a simple current T with dd^c T = (dd^c g) ^ S, the increment of the
m-Lelong function between two radii splits into two integrals of the
dd^c T ball masses and the annulus mass of T against the kernel.
"""

import logging
import math

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.stats import linregress

from services.catalog import SimpleCurrent, as_point
from services.integrate import (
    InvalidRegionError,
    MCConfig,
    annulus_current_mass,
    ball_current_mass,
)
from services.integrate.sampling import geometric_edges, shell_quadrature

from .config import LelongConfig, radius_grid
from .extrapolation import extrapolate
from .profiles import lelong_function
from .schemas import JensenReport, NegativeCurrentReport

logger = logging.getLogger(__name__)

KERNEL_RATIO = 2.0
KERNEL_NODES = 8
RESIDUAL_FLOOR = 1e-12


def residual_scale(lhs: float, first: float, second: float, annulus: float) -> float:
    """Denominator of the relative Lelong-Jensen residual."""
    return max(abs(lhs), abs(first) + abs(second) + abs(annulus), RESIDUAL_FLOOR)


def jensen_residual(lhs: float, first: float, second: float, annulus: float) -> float:
    """Relative gap between the two sides of the identity."""
    return abs(lhs - (first + second + annulus)) / residual_scale(lhs, first, second, annulus)


def _ddc_masses(
    current: SimpleCurrent,
    a: NDArray,
    edges: NDArray[np.float64],
    config: MCConfig,
) -> tuple[NDArray, NDArray, NDArray, NDArray]:
    """Nodes, weights, dd^c T ball masses and their stderrs on shell quadrature."""
    rho, weights = shell_quadrature(edges, KERNEL_NODES)
    ddc = current.ddc()
    if ddc is None:
        zeros = np.zeros_like(rho)
        return rho, weights, zeros, zeros
    estimates = [ball_current_mass(ddc, a, float(r), config) for r in rho]
    masses = np.array([e.value for e in estimates])
    stderrs = np.array([e.stderr for e in estimates])
    return rho, weights, masses, stderrs


def _inner_edges(r: float, config: MCConfig) -> NDArray[np.float64]:
    edges = geometric_edges(config.radial_inner_fraction * r, r, KERNEL_RATIO)
    return np.concatenate([[0.0], edges])


def lelong_jensen(
    current: SimpleCurrent,
    a: ArrayLike,
    r1: float,
    r2: float,
    config: MCConfig | None = None,
    annulus_config: MCConfig | None = None,
) -> JensenReport:
    """
    Both sides of the Lelong-Jensen identity on (r1, r2).

    The left side is nu_T(a, r2) - nu_T(a, r1); the right side is

        int_r1^r2 (rho^-q - r2^-q) 2 rho M(rho) d rho
        + (r1^-q - r2^-q) int_0^r1 2 rho M(rho) d rho
        + mass of T ^ beta^(n-m) ^ (dd^c phi_m)^(m+p-n) over the annulus,

    with q the Lelong exponent of T and M(rho) the dd^c T mass of B(a, rho).

    Args:
        current: Simple current with m + p >= n.
        a: Center.
        r1: Inner radius.
        r2: Outer radius.
        config: Integrator configuration for the ball masses.
        annulus_config: Separate configuration for the annulus term.

    Raises:
        InvalidRegionError: Unless 0 < r1 < r2.
        BidimensionError: If m + p < n.
    """
    if not 0 < r1 < r2:
        raise InvalidRegionError(f"Need 0 < r1 < r2, got r1={r1}, r2={r2}")
    current.require_lelong()
    config = config or MCConfig()
    center = as_point(a, current.setting.n)
    q = current.lelong_exponent

    outer = ball_current_mass(current, center, r2, config)
    inner = ball_current_mass(current, center, r1, config)
    lhs = outer.value / r2**q - inner.value / r1**q
    lhs_stderr = math.hypot(outer.stderr / r2**q, inner.stderr / r1**q)

    rho, w, masses, _ = _ddc_masses(
        current, center, geometric_edges(r1, r2, KERNEL_RATIO), config
    )
    first = float(np.sum(w * (rho**-q - r2**-q) * 2.0 * rho * masses))
    rho, w, masses, _ = _ddc_masses(current, center, _inner_edges(r1, config), config)
    second = (r1**-q - r2**-q) * float(np.sum(w * 2.0 * rho * masses))

    setting = current.setting
    extra = setting.m + current.bidimension - setting.n
    annulus = annulus_current_mass(
        current, center, r1, r2, extra, annulus_config or config
    )
    rhs = first + second + annulus.value
    residual = jensen_residual(lhs, first, second, annulus.value)
    logger.debug(
        f"Lelong-Jensen on ({r1:.3g}, {r2:.3g}): lhs={lhs:.12g} rhs={rhs:.12g}"
    )
    return JensenReport(
        r1=r1,
        r2=r2,
        lhs=lhs,
        first_term=first,
        second_term=second,
        annulus_term=annulus.value,
        rhs=rhs,
        residual=residual,
        stderr=math.hypot(lhs_stderr, annulus.stderr),
    )


def _kernel_exponent(
    radii: NDArray, nu_ddc: NDArray, n: int, m: int
) -> tuple[float | None, bool]:
    """Exponent of t^(1 - 2n/m) nu_ddc(t) at t -> 0, from a log-log slope."""
    nonzero = np.abs(nu_ddc) > 0
    if np.count_nonzero(nonzero) < 2:
        return None, True
    fit = linregress(np.log(radii[nonzero]), np.log(np.abs(nu_ddc[nonzero])))
    exponent = 1.0 - 2.0 * n / m + float(fit.slope)
    return exponent, exponent > -1.0 + 1e-6


def _g_profile(
    current: SimpleCurrent,
    a: NDArray,
    radii: NDArray,
    nu: NDArray,
    config: MCConfig,
) -> NDArray:
    """g(r) = nu_T(r) - int_0^r 2 rho M(rho) (rho^-q - r^-q) d rho on shared nodes."""
    q = current.lelong_exponent
    outer = geometric_edges(
        config.radial_inner_fraction * radii[0], radii[-1], KERNEL_RATIO
    )
    edges = np.unique(np.concatenate([[0.0], outer, radii]))
    rho, w, masses, _ = _ddc_masses(current, a, edges, config)
    g = np.empty_like(nu)
    for index, r in enumerate(radii):
        inside = rho <= r
        kernel = rho[inside] ** -q - r**-q
        g[index] = nu[index] - float(
            np.sum(w[inside] * 2.0 * rho[inside] * masses[inside] * kernel)
        )
    return g


def negative_current_check(
    current: SimpleCurrent,
    a: ArrayLike,
    r0: float,
    config: MCConfig | None = None,
    lelong_config: LelongConfig | None = None,
) -> NegativeCurrentReport:
    """
    Lower bound and convergence of the m-Lelong function of a negative current.

    Upsilon(r) = nu_T(r) - nu_ddc(r0) r^(2(1 - n/m)) / (1 - n/m) is checked
    against c0 = min(0, Upsilon(r0)) on the grid up to r0. When
    t^(1 - 2n/m) nu_ddc(t) is integrable at 0, the corrected profile g(r)
    must be nonincreasing and nu_T(r) converges; the limit is reported.

    Raises:
        BidimensionError: If m + p < n.
        InvalidGridError: If r0 <= r_min.
    """
    config = config or MCConfig()
    lelong_config = lelong_config or LelongConfig()
    setting = current.setting
    n, m = setting.n, setting.m
    center = as_point(a, n)
    profile = lelong_function(
        current, center, lelong_config.r_min, r0, lelong_config.points, config
    )
    radii = np.asarray(profile.radii)
    nu = np.asarray(profile.values)
    stderrs = np.asarray(profile.stderrs)

    ddc = current.ddc()
    q_ddc = current.lelong_exponent - 2.0 * n / m
    if ddc is None:
        nu_ddc = np.zeros_like(radii)
    else:
        nu_ddc = np.array(
            [ball_current_mass(ddc, center, float(r), config).value for r in radii]
        ) / radii**q_ddc

    power = 1.0 - n / m
    upsilon = nu - nu_ddc[-1] * radii ** (2.0 * power) / power
    c0 = min(0.0, float(upsilon[-1]))
    slack = lelong_config.lelong_tolerance * max(1.0, abs(c0))
    satisfied = [
        bool(u >= c0 - lelong_config.sigma * e - slack)
        for u, e in zip(upsilon, stderrs, strict=True)
    ]

    if ddc is None:
        exponent, integrable = None, True
    else:
        exponent, integrable = _kernel_exponent(radii, nu_ddc, n, m)

    g_profile: list[float] = []
    g_nonincreasing = False
    limit = None
    if integrable:
        g = _g_profile(current, center, radii, nu, config)
        g_profile = g.tolist()
        scale = lelong_config.lelong_tolerance * max(1.0, float(np.max(np.abs(g))))
        noise = lelong_config.sigma * (stderrs[1:] + stderrs[:-1])
        g_nonincreasing = bool(np.all(np.diff(g) <= noise + scale))
        if g_nonincreasing:
            window = slice(0, lelong_config.fit_points)
            value, _, _ = extrapolate(
                radii[window], nu[window], stderrs[window], lelong_config.sigma
            )
            limit = value if isinstance(value, float) else None

    if not all(satisfied):
        logger.info(
            f"Lower bound fails at {satisfied.count(False)} of {len(satisfied)} radii"
        )
    return NegativeCurrentReport(
        r0=r0,
        radii=radii.tolist(),
        nu=nu.tolist(),
        upsilon=upsilon.tolist(),
        c0=c0,
        bound_satisfied=satisfied,
        kernel_exponent=exponent,
        kernel_integrable=integrable,
        g_profile=g_profile,
        g_nonincreasing=g_nonincreasing,
        converged=limit is not None,
        limit=limit,
    )

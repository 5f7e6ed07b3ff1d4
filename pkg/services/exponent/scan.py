"""
Integral-scan estimator: the largest c with |f|^c integrable.

For every pole component meeting the region the integral of |f|^c is
split into shells around the component, integrated with Gauss-Legendre
nodes in the distance and a fixed set of transverse directions, and
accumulated from the outside in. An integral diverges when its tail keeps
growing at the innermost cut-offs; the critical c is found by bisection.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.special import logsumexp

from services.catalog import ModelFunction, PoleComponent, as_point
from services.integrate import MCConfig
from services.integrate.sampling import (
    antithetic_directions,
    ball_volume,
    geometric_edges,
    shell_quadrature,
    sphere_area,
    to_complex,
)
from services.lelong.schemas import point_reals

from .config import ExponentConfig
from .exceptions import MissingPoleError
from .regions import CompactRegion
from .schemas import UNBOUNDED, ExponentEstimate, ExponentMethod, PointExponent
from .sublevel import require_negative

logger = logging.getLogger(__name__)

SCAN_DECADES = 2.0
INFIMUM_FRACTION = 0.25
ON_POLE_TOLERANCE = 1e-9
RESOLUTION_FACTOR = 2.0


@dataclass(frozen=True)
class ComponentScan:
    """Precomputed log|f| on the shell nodes around one pole component."""

    component: PoleComponent
    edges: NDArray[np.float64]
    log_weights: NDArray[np.float64]
    log_abs: NDArray[np.float64]
    mask: NDArray[np.bool_]
    nodes_per_shell: int
    resolution: float

    def log_tails(self, c: float) -> NDArray[np.float64]:
        """log of the integral of |f|^c beyond each inner shell edge."""
        with np.errstate(divide="ignore", invalid="ignore"):
            terms = np.where(self.mask, c * self.log_abs, -np.inf)
            rows = logsumexp(terms, axis=1) + self.log_weights
        tails = np.logaddexp.accumulate(rows[::-1])[::-1]
        return tails[:: self.nodes_per_shell]

    def growth(self, c: float) -> float:
        """Growth rate of the tail integral over the innermost decades."""
        tails = self.log_tails(c)
        if np.isneginf(tails[0]):
            return 0.0
        far = min(
            int(np.searchsorted(self.edges, self.edges[0] * 10**SCAN_DECADES)),
            len(tails) - 1,
        )
        if far == 0 or np.isneginf(tails[far]):
            return math.inf
        span = math.log(self.edges[far] / self.edges[0])
        return float((tails[0] - tails[far]) / span)

    def settled(self, c: float, tolerance: float) -> bool:
        """True when the innermost decade adds less than ``tolerance``, relatively."""
        tails = self.log_tails(c)
        if np.isneginf(tails[0]):
            return True
        near = int(np.searchsorted(self.edges, self.edges[0] * 10.0))
        near = min(near, len(tails) - 1)
        return bool(abs(math.expm1(tails[0] - tails[near])) <= tolerance)


def _meets(component: PoleComponent, region: CompactRegion) -> bool:
    return region.gap(component.center_array, component.k) == 0


def _fiber_reach(component: PoleComponent, region: CompactRegion) -> float:
    """Largest distance along the component from its center to the region."""
    k = component.k
    offsets = region.centers[:, k:] - component.center_array[k:]
    return float(np.max(np.linalg.norm(offsets, axis=-1) + region.radii))


def _resolution(
    function: ModelFunction, component: PoleComponent, span: float
) -> float:
    _, s = function.singular_exponents().get(component, (0.0, 0.0))
    return RESOLUTION_FACTOR / (s * span) if s > 0 else 0.0


def scan_components(
    function: ModelFunction,
    region: CompactRegion,
    config: MCConfig,
    exponent_config: ExponentConfig,
) -> list[ComponentScan]:
    """Shell grids around every pole component meeting the region."""
    components = [c for c in function.poles() if _meets(c, region)]
    n = region.dim
    samples = exponent_config.angular_samples
    span = math.log(1.0 / exponent_config.epsilon_floor)
    scans = []
    for index, component in enumerate(components):
        k = component.k
        reach = region.reach(component.center_array, k)
        edges = geometric_edges(
            exponent_config.epsilon_floor * reach, reach, exponent_config.scan_ratio
        )
        rho, weights = shell_quadrature(edges, exponent_config.scan_nodes)

        rng = config.stream("scan", index)
        directions = antithetic_directions(rng, (samples + 1) // 2, 2 * k)[:samples]
        log_weights = (
            np.log(weights)
            + (2 * k - 1) * np.log(rho)
            + math.log(sphere_area(k, 1.0) / samples)
        )
        points = np.empty((rho.size, samples, n), dtype=np.complex128)
        points[..., :k] = component.center_array[:k] + to_complex(
            rho[:, None, None] * directions[None, :, :]
        )
        if k < n:
            fiber = _fiber_reach(component, region)
            real_dim = 2 * (n - k)
            spread = antithetic_directions(rng, (samples + 1) // 2, real_dim)[:samples]
            spread *= fiber * rng.random(samples)[:, None] ** (1.0 / real_dim)
            points[..., k:] = component.center_array[k:] + to_complex(spread)[None]
            log_weights = log_weights + math.log(ball_volume(real_dim, fiber))

        values = function.values(points)
        nearest = np.argmin(
            np.stack([c.distance(points) for c in components]), axis=0
        )
        mask = (
            region.contains(points.reshape(-1, n)).reshape(values.shape)
            & (nearest == index)
            & np.isfinite(values)
            & (values < 0)
        )
        with np.errstate(divide="ignore"):
            log_abs = np.where(mask, np.log(np.abs(values)), 0.0)
        scans.append(
            ComponentScan(
                component=component,
                edges=edges,
                log_weights=log_weights,
                log_abs=log_abs,
                mask=mask,
                nodes_per_shell=exponent_config.scan_nodes,
                resolution=_resolution(function, component, span),
            )
        )
    return scans


def _convergent(scans: list[ComponentScan], c: float, slope: float) -> bool:
    return all(scan.growth(c) <= slope for scan in scans)


def power_integral(
    function: ModelFunction,
    region: CompactRegion,
    c: float,
    config: MCConfig | None = None,
    exponent_config: ExponentConfig | None = None,
) -> tuple[float, bool]:
    """
    Integral of |f|^c over the region.

    Returns:
        (value, converged). ``value`` is the integral outside the innermost
        cut-off; ``converged`` is False when the cut-off still matters.
    """
    config = config or MCConfig()
    exponent_config = exponent_config or ExponentConfig()
    scans = scan_components(function, region, config, exponent_config)

    # no pole meets the region
    if not scans:
        rng = config.stream("power-integral", 0)
        points, density = region.sample_uniform(rng, config.samples_per_shell)
        values = np.abs(function.values(points)) ** c
        return float(np.mean(values / density)), True

    total = -np.inf
    converged = True
    for scan in scans:
        total = np.logaddexp(total, scan.log_tails(c)[0])
        converged &= scan.growth(c) <= exponent_config.divergence_slope
        converged &= scan.settled(c, exponent_config.cauchy_tolerance)
    return float(np.exp(total)), bool(converged)


def integrability_exponent(
    function: ModelFunction,
    region: CompactRegion,
    config: MCConfig | None = None,
    exponent_config: ExponentConfig | None = None,
) -> ExponentEstimate:
    """
    Supremum of c with |f|^c integrable on the region.

    Returns the "unbounded" sentinel when the region contains no pole or
    the integral still converges at ``c_max``.

    Raises:
        NotNegativeOnRegionError: If f is not negative near the region.

    Example:
        >>> from services.catalog import fundamental_solution
        >>> from services.hermitian import Setting
        >>> f = fundamental_solution(Setting(n=2, m=1))
        >>> estimate = integrability_exponent(f, CompactRegion.ball([0, 0], 0.5))
        >>> estimate.interval[0] <= 2.0 <= estimate.interval[1]
        True
    """
    config = config or MCConfig()
    exponent_config = exponent_config or ExponentConfig()
    require_negative(function, region)
    scans = scan_components(function, region, config, exponent_config)
    slope = exponent_config.divergence_slope

    if not scans or _convergent(scans, exponent_config.c_max, slope):
        logger.info("Integral scan found no divergence; exponent unbounded")
        return ExponentEstimate(iota=UNBOUNDED, method=ExponentMethod.INTEGRAL_SCAN)

    lo, hi = 0.0, exponent_config.c_max
    while hi - lo > exponent_config.bisection_width:
        mid = 0.5 * (lo + hi)
        if _convergent(scans, mid, slope):
            lo = mid
        else:
            hi = mid

    resolution = max(scan.resolution for scan in scans)
    iota = 0.5 * (lo + hi)
    logger.info(f"Integral scan exponent {iota:.6g} within [{lo:.6g}, {hi:.6g}]")
    return ExponentEstimate(
        iota=iota,
        method=ExponentMethod.INTEGRAL_SCAN,
        interval=(lo, hi + resolution),
    )


def _on_component(component: PoleComponent, point: NDArray, scale: float) -> bool:
    return float(component.distance(point)) <= ON_POLE_TOLERANCE * (1.0 + scale)


def compact_infimum(
    function: ModelFunction,
    region: CompactRegion,
    sample_points: ArrayLike,
    config: MCConfig | None = None,
    exponent_config: ExponentConfig | None = None,
) -> ExponentEstimate:
    """
    Smallest local exponent over sample points of the region.

    Each point gets a small ball that keeps clear of the other pole
    components. The result is compared with the exponent of the whole
    region and ``consistent`` records whether the two agree.

    Raises:
        MissingPoleError: If a pole component meeting the region has no
            sample point on it.
    """
    config = config or MCConfig()
    exponent_config = exponent_config or ExponentConfig()
    grid = np.asarray(sample_points, dtype=np.complex128).reshape(-1, region.dim)
    points = [as_point(p, region.dim) for p in grid]
    scale = region.radius
    components = [c for c in function.poles() if _meets(c, region)]
    for component in components:
        if not any(_on_component(component, p, scale) for p in points):
            raise MissingPoleError(
                f"Pole component through {point_reals(component.center)} "
                f"(k={component.k}) has no sample point"
            )

    entries = []
    for point in points:
        others = [
            float(c.distance(point))
            for c in function.poles()
            if not _on_component(c, point, scale)
        ]
        radius = INFIMUM_FRACTION * scale
        if others:
            radius = min(radius, 0.5 * min(others))
        estimate = integrability_exponent(
            function, CompactRegion.ball(point, radius), config, exponent_config
        )
        entries.append(
            PointExponent(
                point=point_reals(point), iota=estimate.iota, interval=estimate.interval
            )
        )

    bounded = [e for e in entries if e.iota != UNBOUNDED]
    whole = integrability_exponent(function, region, config, exponent_config)
    if not bounded:
        return ExponentEstimate(
            iota=UNBOUNDED,
            method=ExponentMethod.INTEGRAL_SCAN,
            points=entries,
            consistent=not whole.bounded,
        )

    lowest = min(bounded, key=lambda e: float(e.iota))
    iota = float(lowest.iota)
    consistent = whole.bounded and abs(float(whole.iota) - iota) <= (
        exponent_config.tolerance * iota
    )
    return ExponentEstimate(
        iota=iota,
        method=ExponentMethod.INTEGRAL_SCAN,
        interval=lowest.interval,
        points=entries,
        consistent=consistent,
    )

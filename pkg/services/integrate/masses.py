"""
Masses of simple currents over balls and annuli.

Two paths share the density engine:

* radial quadrature, when the density is rotation-invariant about the
  center: 16-node Gauss-Legendre on geometric shells toward the center,
  an analytic core below the innermost shell and the analytic point mass;
* stratified Monte Carlo otherwise: every pole component meeting the
  region anchors a family of transverse shells, points are assigned to
  their nearest anchor, and each (anchor, shell) shard owns its stream.

Monte Carlo never sees point masses; every catalog atom sits on a radial
path.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from services.catalog import SimpleCurrent, as_point

from .config import MCConfig
from .density import (
    EXPONENT_TOLERANCE,
    check_integrable,
    hessian_density,
    is_radial_current,
    radial_atom,
    radial_budget,
)
from .exceptions import InvalidRegionError
from .sampling import (
    PairAccumulator,
    antithetic_directions,
    ball_volume,
    geometric_edges,
    shell_quadrature,
    shell_radii,
    sphere_area,
    to_complex,
)
from .schemas import Estimate, EstimateMethod

logger = logging.getLogger(__name__)

RADIAL_NODES = 16
CENTER_CORE_FRACTION = 1e-2
COINCIDENT_TOLERANCE = 1e-12


def _check_radii(inner: float, outer: float) -> None:
    if not (np.isfinite(inner) and np.isfinite(outer)):
        raise InvalidRegionError(f"Radii must be finite, got ({inner}, {outer})")
    if outer <= 0:
        raise InvalidRegionError(f"Radius must be positive, got {outer}")
    if inner < 0 or inner >= outer:
        raise InvalidRegionError(f"Annulus needs 0 < r1 < r2, got r1={inner}, r2={outer}")


def radial_integrand(
    current: SimpleCurrent, a: ArrayLike, rho: NDArray[np.float64]
) -> NDArray[np.float64]:
    """Shell density rho -> area(S_rho) * density on a ray from a."""
    n = current.setting.n
    offsets = np.zeros((rho.shape[0], n), dtype=np.complex128)
    offsets[:, 0] = rho
    density = hessian_density(current, offsets, base=as_point(a, n))
    return density * sphere_area(n, rho)


def _radial_mass(
    current: SimpleCurrent, a: ArrayLike, inner: float, outer: float, config: MCConfig
) -> Estimate:
    start = inner if inner > 0 else config.radial_inner_fraction * outer
    edges = geometric_edges(start, outer, config.shell_ratio)
    rho, weights = shell_quadrature(edges, RADIAL_NODES)
    value = float(np.dot(weights, radial_integrand(current, a, rho)))

    atom = 0.0
    if inner == 0:
        closed, total = radial_budget(current)
        if closed > EXPONENT_TOLERANCE and total > EXPONENT_TOLERANCE:
            core = float(radial_integrand(current, a, np.array([start]))[0])
            value += core * start / (2.0 * total)
        atom = radial_atom(current)
        value += atom

    logger.debug(
        f"Radial mass over [{inner:.3g}, {outer:.3g}]: {value:.12g} "
        f"({edges.size - 1} shells, atom {atom:.6g})"
    )
    return Estimate(
        value=value,
        method=EstimateMethod.RADIAL_QUADRATURE,
        atom=atom,
        samples=int(rho.size),
    )


@dataclass(frozen=True)
class _Anchor:
    """Sampling anchor: a point (k = n) or the foot of a tube (k < n)."""

    center: NDArray[np.complex128]
    k: int
    singular: bool

    def distance(self, offsets: NDArray[np.complex128]) -> NDArray[np.float64]:
        return np.linalg.norm(offsets[..., : self.k], axis=-1)


def _anchors(current: SimpleCurrent, a: NDArray, inner: float, outer: float) -> list[_Anchor]:
    n = current.setting.n
    anchors: list[_Anchor] = []
    for component in current.poles():
        distance = float(component.distance(a))
        if distance >= outer or (component.is_point and distance <= inner):
            continue
        center = component.center_array.copy()
        center[component.k :] = a[component.k :]
        anchors.append(_Anchor(center=center, k=component.k, singular=True))
    if not any(
        float(anchor.distance(a - anchor.center)) <= COINCIDENT_TOLERANCE * outer
        for anchor in anchors
    ):
        anchors.insert(0, _Anchor(center=a.copy(), k=n, singular=False))
    return anchors


def _anchor_edges(
    anchor: _Anchor, a: NDArray, inner: float, outer: float, config: MCConfig
) -> NDArray[np.float64]:
    reach = float(anchor.distance(a - anchor.center)) + outer
    if anchor.singular:
        return np.geomspace(config.radial_inner_fraction * outer, reach, config.shells + 1)
    low = max(inner, CENTER_CORE_FRACTION * outer)
    edges = np.geomspace(low, reach, max(1, config.shells - 1) + 1)
    return edges if inner > 0 else np.concatenate([[0.0], edges])


def _shell_job(
    current: SimpleCurrent,
    a: NDArray,
    inner: float,
    outer: float,
    anchors: list[_Anchor],
    index: int,
    shell: int,
    lo: float,
    hi: float,
    config: MCConfig,
    label: str,
) -> tuple[float, float, int]:
    n = current.setting.n
    anchor = anchors[index]
    k = anchor.k
    longitudinal = outer if k < n else 0.0
    volume = (ball_volume(2 * k, hi) - ball_volume(2 * k, lo)) * ball_volume(
        2 * (n - k), longitudinal
    )
    rng = config.stream(label, index, shell)
    accumulator = PairAccumulator()
    remaining = config.pairs_per_shell
    chunk_pairs = max(1, config.chunk_size // 2)

    while remaining > 0:
        pairs = min(chunk_pairs, remaining)
        remaining -= pairs
        offsets = np.zeros((2 * pairs, n), dtype=np.complex128)
        radii = shell_radii(rng, lo, hi, 2 * k, pairs)
        directions = to_complex(antithetic_directions(rng, pairs, 2 * k))
        offsets[:, :k] = directions * np.concatenate([radii, radii])[:, None]
        if k < n:
            along = shell_radii(rng, 0.0, longitudinal, 2 * (n - k), pairs)
            spread = to_complex(antithetic_directions(rng, pairs, 2 * (n - k)))
            offsets[:, k:] = spread * np.concatenate([along, along])[:, None]

        from_center = (anchor.center - a) + offsets
        radius = np.linalg.norm(from_center, axis=-1)
        keep = (radius < outer) & (radius > inner)
        own = anchor.distance(offsets)
        for other_index, other in enumerate(anchors):
            if other_index == index:
                continue
            other_distance = other.distance((anchor.center - other.center) + offsets)
            if other_index < index:
                keep &= own < other_distance
            else:
                keep &= own <= other_distance

        values = np.zeros(2 * pairs)
        if np.any(keep):
            values[keep] = hessian_density(current, offsets[keep], base=anchor.center)
        accumulator.add(values)

    mean_value = volume * accumulator.mean
    variance = volume * volume * accumulator.variance_of_mean
    return mean_value, variance, 2 * accumulator.count


def _monte_carlo_mass(
    current: SimpleCurrent,
    a: NDArray,
    inner: float,
    outer: float,
    config: MCConfig,
    label: str,
) -> Estimate:
    anchors = _anchors(current, a, inner, outer)
    jobs = []
    for index, anchor in enumerate(anchors):
        edges = _anchor_edges(anchor, a, inner, outer, config)
        for shell in range(edges.size - 1):
            jobs.append((index, shell, float(edges[shell]), float(edges[shell + 1])))

    def run(job: tuple[int, int, float, float]) -> tuple[float, float, int]:
        index, shell, lo, hi = job
        return _shell_job(
            current, a, inner, outer, anchors, index, shell, lo, hi, config, label
        )

    if config.workers > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            results = list(pool.map(run, jobs))
    else:
        results = [run(job) for job in jobs]

    value = math.fsum(result[0] for result in results)
    variance = math.fsum(result[1] for result in results)
    samples = sum(result[2] for result in results)
    logger.debug(
        f"Monte-Carlo mass over [{inner:.3g}, {outer:.3g}]: {value:.8g} +- "
        f"{math.sqrt(variance):.3g} ({len(anchors)} anchors, {len(jobs)} shards)"
    )
    return Estimate(
        value=value,
        stderr=math.sqrt(variance),
        method=EstimateMethod.MONTE_CARLO,
        samples=samples,
    )


def _region_mass(
    current: SimpleCurrent,
    a: ArrayLike,
    inner: float,
    outer: float,
    config: MCConfig | None,
    label: str,
) -> Estimate:
    config = config or MCConfig()
    _check_radii(inner, outer)
    a = as_point(a, current.setting.n)
    check_integrable(current, a, outer, inner)
    if config.prefer_radial and is_radial_current(current, a):
        return _radial_mass(current, a, inner, outer, config)
    return _monte_carlo_mass(current, a, inner, outer, config, label)


def ball_current_mass(
    current: SimpleCurrent, a: ArrayLike, r: float, config: MCConfig | None = None
) -> Estimate:
    """
    Mass of T ^ beta^p over the ball B(a, r).

    Args:
        current: Simple current with valid bidegree bookkeeping.
        a: Ball center.
        r: Radius.
        config: Integrator configuration; settings defaults when omitted.

    Returns:
        Estimate; radial-quadrature results include the point mass at a
        (also reported in ``atom``).

    Raises:
        InvalidRegionError: For r <= 0.
        DivergentIntegralError: When exponent counting shows divergence.

    Example:
        >>> from services.catalog import closed_current, radial, Profile
        >>> from services.hermitian import Setting
        >>> setting = Setting(n=2, m=1)
        >>> beta = closed_current(setting, radial(Profile.affine(), 2))
        >>> round(ball_current_mass(beta, [0, 0], 0.5, MCConfig(seed=1)).value, 9)
        0.0625
    """
    return _region_mass(current, a, 0.0, r, config, "ball-mass")


def annulus_current_mass(
    current: SimpleCurrent,
    a: ArrayLike,
    r1: float,
    r2: float,
    extra_kernel_power: int = 0,
    config: MCConfig | None = None,
) -> Estimate:
    """
    Mass of T ^ beta^(n-m) ^ (dd^c phi_m(. - a))^extra over r1 < |z - a| < r2.

    With ``extra_kernel_power = 0`` this is the plain annulus mass of
    T ^ beta^p.

    Raises:
        InvalidRegionError: Unless 0 < r1 < r2.
    """
    if r1 <= 0:
        raise InvalidRegionError(f"Annulus needs r1 > 0, got r1={r1}")
    if extra_kernel_power > 0:
        current = current.with_kernel(a, extra_kernel_power)
    return _region_mass(current, a, r1, r2, config, "annulus-mass")

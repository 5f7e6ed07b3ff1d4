"""
Sphere means, ball means and suprema over balls.
"""

import logging
import math

import numpy as np
from numpy.typing import ArrayLike, NDArray

from services.catalog import ModelFunction, ScaledSum, as_point
from services.catalog.functions import _ProfileFunction

from .config import MCConfig
from .exceptions import DivergentIntegralError, InvalidRegionError
from .sampling import (
    PairAccumulator,
    antithetic_directions,
    gauss_legendre,
    to_complex,
)
from .schemas import Estimate, EstimateMethod

logger = logging.getLogger(__name__)

BALL_NODES = 64
SUP_STARTS = 64
SUP_ITERATIONS = 200
SUP_SEED = 0x5_0B
MAX_REDRAWS = 16


def _check_radius(r: float) -> None:
    if not (np.isfinite(r) and r > 0):
        raise InvalidRegionError(f"Radius must be positive and finite, got {r}")


def _sphere_values(
    function: ModelFunction,
    a: NDArray,
    r: float,
    rng: np.random.Generator,
    pairs: int,
) -> NDArray[np.float64]:
    n = function.dim
    directions = antithetic_directions(rng, pairs, 2 * n)
    values = function.values(r * to_complex(directions), base=a)
    for _ in range(MAX_REDRAWS):
        bad = ~np.isfinite(values)
        if not np.any(bad):
            break
        # Exact pole hits have measure zero; redraw those points.
        fresh = antithetic_directions(rng, int(bad.sum()), 2 * n)[: int(bad.sum())]
        values[bad] = function.values(r * to_complex(fresh), base=a)
    return values


def sphere_mean(
    function: ModelFunction,
    a: ArrayLike,
    r: float,
    config: MCConfig | None = None,
    shard: int = 0,
) -> Estimate:
    """
    Average of f over the sphere S(a, r).

    Exact for functions radial about a; Monte Carlo over antithetic
    normalized Gaussian directions otherwise.

    Args:
        function: Model function.
        a: Center.
        r: Radius, > 0.
        config: Integrator configuration.
        shard: Stream index, so that distinct radii can share or separate
            their random numbers.

    Raises:
        InvalidRegionError: If r <= 0.

    Example:
        >>> from services.catalog import radial, Profile
        >>> sphere_mean(radial(Profile.affine(), 3), [0, 0, 0], 2.0).value
        4.0
    """
    _check_radius(r)
    config = config or MCConfig()
    a = as_point(a, function.dim)
    if config.prefer_radial and function.is_radial_about(a):
        value = float(function.radial_value(np.array(r * r)))
        return Estimate(value=value, method=EstimateMethod.CLOSED_FORM)

    rng = config.stream("sphere-mean", shard)
    accumulator = PairAccumulator()
    remaining = config.pairs_per_shell
    chunk_pairs = max(1, config.chunk_size // 2)
    while remaining > 0:
        pairs = min(chunk_pairs, remaining)
        remaining -= pairs
        accumulator.add(_sphere_values(function, a, r, rng, pairs))
    return Estimate(
        value=accumulator.mean,
        stderr=math.sqrt(accumulator.variance_of_mean),
        method=EstimateMethod.MONTE_CARLO,
        samples=2 * accumulator.count,
    )


def _singular_exponent_at(function: ModelFunction, a: NDArray, r: float) -> float:
    """
    Value exponent at a of the pole through a, after checking every pole in
    the ball is integrable.
    """
    exponent = 0.0
    for component, (_, s) in function.singular_exponents().items():
        distance = float(component.distance(a))
        if distance >= r:
            continue
        if s >= component.k:
            raise DivergentIntegralError(
                f"|f| ~ dist^(-{2 * s:.6g}) is not integrable near a pole of "
                f"transverse dimension {2 * component.k}"
            )
        if distance == 0.0:
            exponent = max(exponent, s)
    return exponent


def ball_mean(
    function: ModelFunction, a: ArrayLike, r: float, config: MCConfig | None = None
) -> Estimate:
    """
    Average of f over the ball B(a, r).

    Uses Lambda(r) = 2n int_0^1 t^(2n-1) lambda(rt) dt with 64-node
    Gauss-Legendre in t = u^(n/(n-s)), where |f| ~ |z - a|^(-2s) at a.

    Raises:
        InvalidRegionError: If r <= 0.
        DivergentIntegralError: If a pole in the ball is not integrable.

    Example:
        >>> from services.catalog import radial, Profile
        >>> round(ball_mean(radial(Profile.affine(), 2), [0, 0], 1.0).value, 12)
        0.666666666667
    """
    _check_radius(r)
    config = config or MCConfig()
    a = as_point(a, function.dim)
    n = function.dim
    s = _singular_exponent_at(function, a, r)
    power = n / (n - s)

    u, w = gauss_legendre(BALL_NODES)
    t = u**power
    weights = w * power * u ** (power - 1.0) * 2.0 * n * t ** (2 * n - 1)

    means = [
        sphere_mean(function, a, r * float(ti), config, shard=i)
        for i, ti in enumerate(t)
    ]
    pairs = list(zip(weights.tolist(), means, strict=True))
    value = math.fsum(wi * m.value for wi, m in pairs)
    if any(m.is_monte_carlo for m in means):
        stderr = math.sqrt(math.fsum((wi * m.stderr) ** 2 for wi, m in pairs))
        return Estimate(
            value=value,
            stderr=stderr,
            method=EstimateMethod.MONTE_CARLO,
            samples=sum(m.samples for m in means),
        )
    return Estimate(
        value=value, method=EstimateMethod.RADIAL_QUADRATURE, samples=BALL_NODES
    )


def _profile_sup(function: _ProfileFunction, a: NDArray, r: float) -> float:
    block = function.block
    offset = a[:block] - np.asarray(function.center[:block], dtype=np.complex128)
    distance = float(np.linalg.norm(offset))
    reach = distance + r if function.profile.increasing else max(distance - r, 0.0)
    with np.errstate(divide="ignore"):
        return float(function.profile.value(np.array(reach * reach)))


def _ascent(function: ModelFunction, a: NDArray, r: float) -> float:
    n = function.dim
    rng = np.random.default_rng(np.random.SeedSequence(SUP_SEED))
    directions = to_complex(antithetic_directions(rng, SUP_STARTS // 2, 2 * n))
    radii = r * rng.random(SUP_STARTS) ** (1.0 / (2 * n))
    radii[: SUP_STARTS // 4] = r
    offsets = directions * radii[:, None]

    def project(z: NDArray) -> NDArray:
        norms = np.linalg.norm(z, axis=-1, keepdims=True)
        return np.where(norms > r, z * (r / np.maximum(norms, 1e-300)), z)

    with np.errstate(all="ignore"):
        values = function.values(offsets, base=a)
        step = np.full(SUP_STARTS, 0.1 * r)
        for _ in range(SUP_ITERATIONS):
            grad = function.gradients(offsets, base=a)
            grad = np.where(np.isfinite(grad), grad, 0.0)
            norms = np.linalg.norm(grad, axis=-1, keepdims=True)
            direction = grad / np.maximum(norms, 1e-300)
            trial = project(offsets + step[:, None] * direction)
            trial_values = function.values(trial, base=a)
            better = trial_values > values
            offsets = np.where(better[:, None], trial, offsets)
            values = np.where(better, trial_values, values)
            step = np.where(better, step * 1.2, step * 0.5)
            if np.all(step < 1e-12 * r):
                break
    return float(np.max(values))


def ball_sup(
    function: ModelFunction, a: ArrayLike, r: float, config: MCConfig | None = None
) -> Estimate:
    """
    Supremum of f over the closed ball B(a, r).

    Closed form for radial and cylindrical profiles and for sums that are
    monotone and radial about a; otherwise the best of 64 projected
    gradient-ascent runs, flagged as a lower bound.

    Example:
        >>> from services.catalog import cylindrical, Profile
        >>> tube = cylindrical(Profile.power(0.5), 4, 3)
        >>> ball_sup(tube, [0, 0, 0, 0], 0.25).value
        -4.0
    """
    _check_radius(r)
    a = as_point(a, function.dim)
    if isinstance(function, _ProfileFunction):
        return Estimate(
            value=_profile_sup(function, a, r), method=EstimateMethod.CLOSED_FORM
        )
    if function.is_radial_about(a) and function.is_monotone_radial():
        value = float(function.radial_value(np.array(r * r)))
        return Estimate(value=value, method=EstimateMethod.CLOSED_FORM)
    if isinstance(function, ScaledSum):
        active = [(c, f) for c, f in function.terms if c > 0]
        if len(active) == 1:
            inner = ball_sup(active[0][1], a, r, config)
            return inner.model_copy(update={"value": active[0][0] * inner.value})

    value = _ascent(function, a, r)
    logger.debug(f"Ball sup by ascent at r={r:.3g}: {value:.12g}")
    return Estimate(
        value=value,
        method=EstimateMethod.MONTE_CARLO,
        lower_bound=True,
        samples=SUP_STARTS,
    )

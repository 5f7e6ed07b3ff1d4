"""
m-subharmonicity classification.

Closed-form thresholds are authoritative for radial and cylindrical
profiles; nonnegative sums fall back on the cone property and then on
sampling the signs of sigma_k over a deterministic point cloud.
"""

import logging
from enum import Enum

import numpy as np

from services.hermitian import elementary_symmetric

from .currents import SimpleCurrent
from .exceptions import CatalogError
from .functions import (
    CylindricalFunction,
    ModelFunction,
    ProfileKind,
    RadialFunction,
    ScaledSum,
)

logger = logging.getLogger(__name__)

THRESHOLD_TOLERANCE = 1e-12
SAMPLE_COUNT = 10_000
SAMPLE_RADIUS = 2.0
SAMPLE_TOLERANCE = 1e-9
SAMPLE_SEED = 0x5EED
POLE_RADIUS = 0.5


class MshClass(str, Enum):
    """Classification outcome."""

    MSH = "msh"
    NOT_MSH = "not-msh"
    BOUNDARY = "boundary"  # sigma_m vanishes identically off the pole

    @property
    def is_msh(self) -> bool:
        return self is not MshClass.NOT_MSH


def _profile_class(function: RadialFunction | CylindricalFunction, m: int) -> MshClass:
    profile = function.profile
    if profile.kind is ProfileKind.LOG:
        return MshClass.MSH
    if profile.kind is ProfileKind.AFFINE:
        return MshClass.MSH if profile.c1 >= 0 else MshClass.NOT_MSH

    threshold = function.block / m - 1.0
    tolerance = THRESHOLD_TOLERANCE * max(1.0, abs(threshold))
    if isinstance(function, RadialFunction) and abs(profile.s - threshold) <= tolerance:
        return MshClass.BOUNDARY
    return MshClass.MSH if profile.s <= threshold + tolerance else MshClass.NOT_MSH


def _ball_points(
    rng: np.random.Generator, center: np.ndarray, radii: np.ndarray
) -> np.ndarray:
    n = center.shape[0]
    directions = rng.normal(size=(radii.shape[0], 2 * n))
    directions /= np.linalg.norm(directions, axis=1, keepdims=True)
    return center + (directions[:, 0::2] + 1j * directions[:, 1::2]) * radii[:, None]


def _sampled_class(function: ModelFunction, m: int) -> MshClass:
    n = function.dim
    rng = np.random.default_rng(np.random.SeedSequence(SAMPLE_SEED))
    poles = function.poles()
    origin = (
        np.mean([component.center_array for component in poles], axis=0)
        if poles
        else np.zeros(n, dtype=np.complex128)
    )
    # Half the cloud is uniform in the big ball, the rest hugs each pole.
    bulk = SAMPLE_COUNT // 2 if poles else SAMPLE_COUNT
    bulk_radii = SAMPLE_RADIUS * rng.random(bulk) ** (1.0 / (2 * n))
    clouds = [_ball_points(rng, origin, bulk_radii)]
    for component in poles:
        count = (SAMPLE_COUNT - bulk) // len(poles)
        radii = POLE_RADIUS * np.power(10.0, -3.0 * rng.random(count))
        clouds.append(_ball_points(rng, component.center_array, radii))
    points = np.concatenate(clouds)

    keep = np.ones(points.shape[0], dtype=bool)
    for component in poles:
        keep &= component.distance(points) > 1e-6
    spectra = np.linalg.eigvalsh(function.hessians(points[keep]))

    for k in range(1, m + 1):
        sigma = elementary_symmetric(spectra, k)
        scale = elementary_symmetric(np.abs(spectra), k)
        if np.any(sigma < -SAMPLE_TOLERANCE * (1.0 + scale)):
            logger.debug(f"Sampling found sigma_{k} < 0 for {type(function).__name__}")
            return MshClass.NOT_MSH
    return MshClass.MSH


def msh_classify(function: ModelFunction, m: int) -> MshClass:
    """
    Classify a model function as m-subharmonic, boundary, or not.

    Args:
        function: Catalog function, smooth off its pole set.
        m: Positivity index, 1 <= m <= n.

    Returns:
        MshClass.

    Raises:
        CatalogError: If m is out of range.

    Example:
        >>> from services.hermitian import Setting
        >>> from services.catalog.functions import fundamental_solution
        >>> msh_classify(fundamental_solution(Setting(n=3, m=2)), 2)
        <MshClass.BOUNDARY: 'boundary'>
    """
    if not 1 <= m <= function.dim:
        raise CatalogError(f"m must satisfy 1 <= m <= n, got m={m}, n={function.dim}")

    if isinstance(function, RadialFunction | CylindricalFunction):
        return _profile_class(function, m)

    if isinstance(function, ScaledSum):
        active = [f for c, f in function.terms if c > 0]
        if not active:
            return MshClass.MSH
        if len(active) == 1:
            return msh_classify(active[0], m)
        if all(msh_classify(term, m).is_msh for term in active):
            return MshClass.MSH

    return _sampled_class(function, m)


def msh_max_order(function: ModelFunction) -> int:
    """Largest m for which the function is m-sh (n for plurisubharmonic, 0 if none)."""
    for m in range(function.dim, 0, -1):
        if msh_classify(function, m).is_msh:
            return m
    return 0


def certified_m_positive(current: SimpleCurrent) -> bool:
    """
    True when T = (dd^c u_1)^k_1 ^ ... ^ beta^j with every u_i m-sh and q <= m.
    """
    m = current.setting.m
    if current.coefficient is not None:
        return False
    if current.ddc_degree > m:
        return False
    return all(
        msh_classify(function, m).is_msh for function, k in current.factors if k > 0
    )

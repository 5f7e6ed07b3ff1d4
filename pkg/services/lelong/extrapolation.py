"""
Extrapolation of ratio profiles to r -> 0.

The model is nu(r) = nu_0 + C r^gamma with gamma in [0.05, 4], fitted by
bounded least squares on the smallest radii of the grid.
"""

import logging
import math

import numpy as np
from numpy.typing import ArrayLike
from scipy.optimize import curve_fit

from .schemas import DOES_NOT_CONVERGE, FitDiagnostics, FitModel

logger = logging.getLogger(__name__)

GAMMA_BOUNDS = (0.05, 4.0)
FLAT_FLOOR = 1e-6
RESIDUAL_LIMIT = 1e-2


def _power_law(x, nu0, coefficient, gamma):
    return nu0 + coefficient * np.power(x, gamma)


def _initial_guess(x, values) -> tuple[float, float, float]:
    steps = np.abs(np.diff(values))
    gamma = 1.0
    if steps[0] > 0 and steps[-1] > 0 and x[-2] > x[0]:
        gamma = math.log(steps[-1] / steps[0]) / math.log(x[-2] / x[0])
    gamma = float(np.clip(gamma, *GAMMA_BOUNDS))
    coefficient = (values[-1] - values[0]) / (1.0 - x[0] ** gamma)
    return float(values[0] - coefficient * x[0] ** gamma), float(coefficient), gamma


def extrapolate(
    radii: ArrayLike, values: ArrayLike, stderrs: ArrayLike, sigma: float = 3.0
) -> tuple[float | str, float, FitDiagnostics]:
    """
    Limit of a profile as r -> 0.

    Args:
        radii: Increasing radii of the fit window.
        values: Profile values at those radii.
        stderrs: Standard errors of the values.
        sigma: Noise multiplier for the flatness and growth tests.

    Returns:
        (limit, stderr, diagnostics); the limit is "does-not-converge" when the
        profile keeps moving toward r = 0 faster than a power law can settle.

    Example:
        >>> r = [1e-4 * 2**k for k in range(8)]
        >>> nu, _, diag = extrapolate(r, [1 + 3 * x for x in r], [0.0] * 8)
        >>> round(nu, 9), diag.model.value
        (1.0, 'power-law')
    """
    radii = np.asarray(radii, dtype=np.float64)
    values = np.asarray(values, dtype=np.float64)
    stderrs = np.asarray(stderrs, dtype=np.float64)
    window = radii.tolist()

    if not np.all(np.isfinite(values)):
        message = "profile has non-finite values"
        logger.info(f"Extrapolation failed: {message}")
        diagnostics = FitDiagnostics(model=FitModel.NONE, radii=window, message=message)
        return DOES_NOT_CONVERGE, 0.0, diagnostics

    noise = sigma * float(np.max(stderrs)) if stderrs.size else 0.0
    spread = float(np.ptp(values))
    if spread <= max(FLAT_FLOOR, noise):
        diagnostics = FitDiagnostics(model=FitModel.FLAT, residual=spread, radii=window)
        return float(values[0]), float(stderrs[0]), diagnostics

    steps = np.abs(np.diff(values))
    if steps[0] > noise and steps[0] >= steps[-1]:
        message = (
            f"increments grow toward r = 0 ({steps[0]:.3g} at the smallest radius, "
            f"{steps[-1]:.3g} at the largest)"
        )
        logger.info(f"Profile does not converge: {message}")
        diagnostics = FitDiagnostics(
            model=FitModel.NONE, residual=spread, radii=window, message=message
        )
        return DOES_NOT_CONVERGE, 0.0, diagnostics

    x = radii / radii[-1]
    weights = stderrs if np.all(stderrs > 0) else None
    try:
        params, covariance = curve_fit(
            _power_law,
            x,
            values,
            p0=_initial_guess(x, values),
            sigma=weights,
            absolute_sigma=weights is not None,
            bounds=([-np.inf, -np.inf, GAMMA_BOUNDS[0]], [np.inf, np.inf, GAMMA_BOUNDS[1]]),
            max_nfev=10_000,
        )
    except (RuntimeError, ValueError) as exc:
        logger.info(f"Profile does not converge: power-law fit failed ({exc})")
        diagnostics = FitDiagnostics(
            model=FitModel.NONE, residual=spread, radii=window, message=str(exc)
        )
        return DOES_NOT_CONVERGE, 0.0, diagnostics

    nu0, coefficient, gamma = (float(p) for p in params)
    residual = float(np.sqrt(np.mean((_power_law(x, *params) - values) ** 2))) / spread
    diagnostics = FitDiagnostics(
        model=FitModel.POWER_LAW,
        residual=residual,
        radii=window,
        gamma=gamma,
        coefficient=coefficient * radii[-1] ** (-gamma),
    )
    if residual > RESIDUAL_LIMIT and gamma <= GAMMA_BOUNDS[0] * (1.0 + 1e-6):
        message = f"fit pinned at gamma = {gamma:.3g} with residual {residual:.3g}"
        logger.info(f"Profile does not converge: {message}")
        return DOES_NOT_CONVERGE, 0.0, diagnostics.model_copy(update={"message": message})

    variance = float(covariance[0, 0]) if np.all(np.isfinite(covariance)) else math.nan
    stderr = math.sqrt(variance) if variance >= 0 else float(stderrs[0])
    logger.debug(
        f"Power-law fit: nu0={nu0:.12g} gamma={gamma:.4g} residual={residual:.3g}"
    )
    return nu0, stderr, diagnostics

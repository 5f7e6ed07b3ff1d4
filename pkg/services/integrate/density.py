"""
Pointwise densities of simple currents and exponent counting.

The density of T = g (dd^c v_1)^k_1 ^ ... ^ beta^(n-q) against Lebesgue
measure is (n!/pi^n) g D(H_1 x k_1, ..., I x (n - q)), with H_i the
complex Hessians of the v_i and D the mixed discriminant.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from services.catalog import (
    ModelFunction,
    PoleComponent,
    ProfileKind,
    RadialFunction,
    ScaledSum,
    SimpleCurrent,
    as_point,
)
from services.hermitian import identity_discriminant

from .exceptions import DivergentIntegralError

logger = logging.getLogger(__name__)

DENSITY_CUTOFF = 1e-9
EXPONENT_TOLERANCE = 1e-9


def wedge_constant(n: int) -> float:
    """n!/pi^n, the density of beta^n against Lebesgue measure."""
    return math.factorial(n) / math.pi**n


def hessian_density(
    current: SimpleCurrent, points: ArrayLike, base: ArrayLike | None = None
) -> NDArray[np.float64]:
    """
    Density of the top-degree form T ^ beta^p at a batch of points.

    Discriminants below DENSITY_CUTOFF times their natural scale are
    cancellation noise and are returned as exact zeros.

    Args:
        current: The simple current T.
        points: Shape (N, n); offsets from ``base`` when it is given.
        base: Optional base point for full-precision offsets.

    Returns:
        Array of N densities.
    """
    n = current.setting.n
    points = np.asarray(points, dtype=np.complex128).reshape(-1, n)
    with np.errstate(invalid="ignore", over="ignore", divide="ignore"):
        groups = [
            (function.hessians(points, base), k) for function, k in current.factors if k > 0
        ]
        if groups:
            values, scales = identity_discriminant(groups, n)
            values = np.where(np.abs(values) <= DENSITY_CUTOFF * scales, 0.0, values)
        else:
            values = np.ones(points.shape[0])
        if current.coefficient is not None:
            values = current.coefficient.values(points, base) * values
    return wedge_constant(n) * values


def has_constant_hessian(function: ModelFunction) -> bool:
    """True for affine profiles and nonnegative sums of them."""
    if isinstance(function, RadialFunction):
        return function.profile.kind is ProfileKind.AFFINE
    if isinstance(function, ScaledSum):
        return all(has_constant_hessian(f) for c, f in function.terms if c > 0)
    return False


def is_radial_current(current: SimpleCurrent, a: ArrayLike) -> bool:
    """True when the density of T is rotation-invariant about a."""
    if current.coefficient is not None and not current.coefficient.is_radial_about(a):
        return False
    return all(
        function.is_radial_about(a) or has_constant_hessian(function)
        for function, k in current.factors
        if k > 0
    )


@dataclass(frozen=True)
class PoleBudget:
    """
    Exponent bookkeeping for T near one pole component, in t = dist^2.

    The closed part of T has mass ~ t^closed near the component; the
    coefficient behaves like t^(-coefficient_exponent).
    """

    component: PoleComponent
    closed: float
    coefficient_exponent: float
    coefficient_singular: bool

    @property
    def total(self) -> float:
        return self.closed - self.coefficient_exponent

    @property
    def atomic(self) -> bool:
        """The closed part concentrates mass on the component itself."""
        return abs(self.closed) <= EXPONENT_TOLERANCE

    @property
    def integrable(self) -> bool:
        if self.closed < -EXPONENT_TOLERANCE:
            return False
        if self.atomic:
            return not self.coefficient_singular
        return self.total > EXPONENT_TOLERANCE


def pole_budget(current: SimpleCurrent, component: PoleComponent) -> PoleBudget:
    hessian_exponent = sum(
        k * function.singular_exponents().get(component, (0.0, 0.0))[0]
        for function, k in current.factors
        if k > 0
    )
    coefficient_exponent, singular = 0.0, False
    if current.coefficient is not None:
        exponents = current.coefficient.singular_exponents()
        if component in exponents:
            coefficient_exponent, singular = exponents[component][1], True
    return PoleBudget(
        component=component,
        closed=component.k - hessian_exponent,
        coefficient_exponent=coefficient_exponent,
        coefficient_singular=singular,
    )


def check_integrable(
    current: SimpleCurrent, a: ArrayLike, outer: float, inner: float = 0.0
) -> list[PoleBudget]:
    """
    Exponent counting over the pole components meeting {inner <= |z - a| <= outer}.

    Returns:
        The budgets of the relevant components.

    Raises:
        DivergentIntegralError: If any relevant component is not integrable.
    """
    a = as_point(a, current.setting.n)
    budgets = []
    for component in current.poles():
        distance = float(component.distance(a))
        if distance > outer:
            continue
        if component.is_point and distance < inner:
            continue
        budget = pole_budget(current, component)
        if not budget.integrable:
            raise DivergentIntegralError(
                f"Density is not integrable near the pole at {list(component.center)} "
                f"(closed exponent {budget.closed:.6g}, coefficient exponent "
                f"{budget.coefficient_exponent:.6g})"
            )
        budgets.append(budget)
    return budgets


def radial_budget(current: SimpleCurrent) -> tuple[float, float]:
    """
    (closed, total) exponents in t for a current radial about its center.

    The closed part has mass ~ t^closed; the density integrand ~ t^(total - 1).
    """
    closed = float(current.setting.n)
    for function, k in current.factors:
        if k > 0:
            closed -= k * function.radial_leading()[0]
    coefficient_exponent = 0.0
    if current.coefficient is not None:
        coefficient_exponent = max(0.0, current.coefficient.radial_leading()[0] - 1.0)
    return closed, closed - coefficient_exponent


def radial_atom(current: SimpleCurrent) -> float:
    """
    Point mass of T at the common center: lim c(t) t^n prod g_i'(t)^k_i.

    Raises:
        DivergentIntegralError: If the closed part has infinite mass at the
            center, or a singular coefficient meets a nonzero atom.
    """
    closed, _ = radial_budget(current)
    if closed < -EXPONENT_TOLERANCE:
        raise DivergentIntegralError(
            f"Closed part has infinite mass at the center (exponent {closed:.6g})"
        )
    if closed > EXPONENT_TOLERANCE:
        return 0.0
    atom = 1.0
    for function, k in current.factors:
        if k > 0:
            atom *= function.radial_leading()[1] ** k
    if current.coefficient is None or atom == 0.0:
        return atom
    with np.errstate(divide="ignore", invalid="ignore"):
        value = float(current.coefficient.radial_value(np.array(0.0)))
    if not np.isfinite(value):
        raise DivergentIntegralError("Singular coefficient meets a point mass at the center")
    return value * atom

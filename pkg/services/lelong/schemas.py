"""
Result schemas for the Lelong service.

Points are stored as interleaved (re, im) real lists so that every report
serializes to plain JSON.
"""

from enum import Enum
from typing import Literal

import numpy as np
from pydantic import BaseModel, Field, model_validator

from services.integrate import EstimateMethod

DOES_NOT_CONVERGE = "does-not-converge"
HYPOTHESIS_UNVERIFIED = "hypothesis-unverified"


def point_reals(point) -> list[float]:
    """Interleaved (re, im) parts of a complex point."""
    values = np.asarray(point, dtype=np.complex128).reshape(-1)
    return np.column_stack([values.real, values.imag]).reshape(-1).tolist()


class LelongMethod(str, Enum):
    """How a Lelong-type number was obtained."""

    DEFINITION = "definition-extrapolation"
    SPHERE_MEAN = "sphere-mean"
    BALL_MEAN = "ball-mean"
    SUP_GROWTH = "sup-growth"


class FitModel(str, Enum):
    """Extrapolation model that produced a limit."""

    FLAT = "flat"
    POWER_LAW = "power-law"
    NONE = "none"


class FitDiagnostics(BaseModel):
    """Diagnostics of the r -> 0 extrapolation."""

    model: FitModel
    residual: float = 0.0
    radii: list[float] = Field(default_factory=list)
    gamma: float | None = None
    coefficient: float | None = None
    message: str = ""


class LelongProfile(BaseModel):
    """A ratio profile r -> value on a geometric radius grid."""

    center: list[float]
    exponent: float
    radii: list[float]
    values: list[float]
    stderrs: list[float]
    method: EstimateMethod
    atom: float = 0.0

    @model_validator(mode="after")
    def check_grid(self) -> "LelongProfile":
        if not (len(self.radii) == len(self.values) == len(self.stderrs)):
            raise ValueError("radii, values and stderrs must have the same length")
        if len(self.radii) < 2:
            raise ValueError("A profile needs at least two radii")
        if any(b <= a for a, b in zip(self.radii, self.radii[1:])):
            raise ValueError("radii must be strictly increasing")
        if not all(np.isfinite(self.values)):
            raise ValueError("profile values must be finite")
        return self

    def is_nondecreasing(self, sigma: float = 3.0) -> bool:
        """Nondecreasing within ``sigma`` combined standard errors per step."""
        return all(
            b >= a - sigma * float(np.hypot(sa, sb))
            for a, b, sa, sb in zip(
                self.values, self.values[1:], self.stderrs, self.stderrs[1:]
            )
        )

    def rows(self) -> list[tuple[float, float, float, str]]:
        """(r, nu, stderr, method) per radius."""
        return [
            (r, v, e, self.method.value)
            for r, v, e in zip(self.radii, self.values, self.stderrs, strict=True)
        ]


class LelongEstimate(BaseModel):
    """A Lelong number, or the non-convergence sentinel."""

    nu: float | Literal["does-not-converge"]
    stderr: float = 0.0
    method: LelongMethod
    diagnostics: FitDiagnostics
    monotone: bool | None = None

    @property
    def converged(self) -> bool:
        return self.nu != DOES_NOT_CONVERGE


class MeanValueReport(BaseModel):
    """Sphere and ball growth limits relative to the radial weight."""

    center: list[float]
    shift: float
    sphere_limit: LelongEstimate
    ball_limit: LelongEstimate
    ratio: float | None
    expected_ratio: float
    kappa: float
    calibrated_nu: float | None
    sphere_convex: bool
    min_second_difference: float


class SupGrowthReport(BaseModel):
    """Growth of the supremum over balls relative to the radial weight."""

    center: list[float]
    limit: LelongEstimate
    kappa: float
    calibrated: float | None
    convex: bool
    min_second_difference: float
    lower_bound: bool


class JensenReport(BaseModel):
    """Both sides of the Lelong-Jensen identity between two radii."""

    r1: float
    r2: float
    lhs: float
    first_term: float
    second_term: float
    annulus_term: float
    rhs: float
    residual: float
    stderr: float = 0.0


class NegativeCurrentReport(BaseModel):
    """Lower bound and convergence analysis for a negative current."""

    r0: float
    radii: list[float]
    nu: list[float]
    upsilon: list[float]
    c0: float
    bound_satisfied: list[bool]
    kernel_exponent: float | None
    kernel_integrable: bool
    g_profile: list[float]
    g_nonincreasing: bool
    converged: bool
    limit: float | None

    @property
    def bound_holds(self) -> bool:
        return all(self.bound_satisfied)


class GreenIdentityReport(BaseModel):
    """Sphere-mean increment against the integrated Lelong function."""

    r1: float
    r2: float
    sphere_difference: float
    lelong_integral: float
    constant: float | None
    stderr: float = 0.0


class PointMassReport(BaseModel):
    """Hessian-measure atom against the Lelong number."""

    center: list[float]
    atom: float | None
    nu: float | Literal["does-not-converge"] | None
    bound: float | None
    satisfied: bool | None
    hypothesis: str = HYPOTHESIS_UNVERIFIED


class SubMeanValueReport(BaseModel):
    """Sphere means against the value at a finite point."""

    center: list[float]
    value: float | None
    applicable: bool
    satisfied: bool
    min_margin: float | None


class LelongMapEntry(BaseModel):
    """One grid point of a Lelong map."""

    point: list[float]
    nu: float | Literal["does-not-converge"]
    stderr: float = 0.0
    method: LelongMethod = LelongMethod.SPHERE_MEAN


class LelongMap(BaseModel):
    """A Lelong map with its upper-semicontinuity spot check."""

    entries: list[LelongMapEntry]
    kappa: float
    usc_holds: bool
    usc_violations: list[str] = Field(default_factory=list)

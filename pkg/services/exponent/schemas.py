"""
Result schemas for the integrability-exponent service.
"""

from enum import Enum
from typing import Literal

from pydantic import BaseModel, Field, model_validator

UNBOUNDED = "unbounded"


class ExponentMethod(str, Enum):
    """Estimator that produced an exponent."""

    TAIL_SLOPE = "tail-slope"
    INTEGRAL_SCAN = "integral-scan"


class VolumeMethod(str, Enum):
    """How a sublevel volume was obtained."""

    CLOSED_FORM = "closed-form"
    MONTE_CARLO = "monte-carlo"


class SublevelEstimate(BaseModel):
    """Volume of {f <= t} inside the region."""

    t: float
    volume: float
    stderr: float = 0.0
    method: VolumeMethod
    degenerate: bool = False

    @model_validator(mode="after")
    def check_volume(self) -> "SublevelEstimate":
        if self.volume < 0 or self.stderr < 0:
            raise ValueError("volume and stderr must be nonnegative")
        return self

    def row(self) -> tuple[float, float, float]:
        return self.t, self.volume, self.stderr


class TailFit(BaseModel):
    """Log-log fit of sublevel volumes against |t|."""

    alpha: float | Literal["unbounded"]
    c_alpha: float | None = None
    r_squared: float | None = None
    alpha_stderr: float = 0.0
    t_range: tuple[float, float]
    accepted: bool
    volumes: list[SublevelEstimate] = Field(default_factory=list)
    message: str = ""

    @property
    def interval(self) -> tuple[float, float] | None:
        if self.alpha == UNBOUNDED:
            return None
        spread = 3.0 * self.alpha_stderr
        return float(self.alpha) - spread, float(self.alpha) + spread


class PointExponent(BaseModel):
    """Exponent at one sample point of a compact infimum."""

    point: list[float]
    iota: float | Literal["unbounded"]
    interval: tuple[float, float] | None = None


class ExponentEstimate(BaseModel):
    """An integrability exponent, or the "unbounded" sentinel."""

    iota: float | Literal["unbounded"]
    method: ExponentMethod
    interval: tuple[float, float] | None = None
    points: list[PointExponent] = Field(default_factory=list)
    consistent: bool | None = None

    @property
    def bounded(self) -> bool:
        return self.iota != UNBOUNDED


class BoundsReport(BaseModel):
    """Lower and upper bounds on the exponent at a point."""

    center: list[float]
    iota: ExponentEstimate
    nu: float | Literal["does-not-converge"]
    nu_stderr: float = 0.0
    lower: float
    lower_holds: bool
    upper: float
    upper_applicable: bool
    upper_holds: bool | None
    m1_identity: bool | None = None

    @property
    def holds(self) -> bool:
        return self.lower_holds and self.upper_holds is not False and self.m1_identity is not False


class MarkovReport(BaseModel):
    """Chebyshev-Markov bound V(t) |t|^alpha <= integral of |f|^alpha."""

    alpha: float
    integral: float | None
    rows: list[tuple[float, float]] = Field(default_factory=list)
    applicable: bool
    holds: bool | None

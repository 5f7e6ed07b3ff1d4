"""
Result schemas for the integration service.
"""

from enum import Enum

from pydantic import BaseModel, model_validator


class EstimateMethod(str, Enum):
    """How an estimate was produced."""

    CLOSED_FORM = "closed-form"
    RADIAL_QUADRATURE = "radial-quadrature"
    MONTE_CARLO = "monte-carlo"


class Estimate(BaseModel):
    """A value with its standard error."""

    value: float
    stderr: float = 0.0
    method: EstimateMethod
    lower_bound: bool = False
    atom: float = 0.0
    samples: int = 0

    @model_validator(mode="after")
    def check_error_model(self) -> "Estimate":
        """
        Only Monte-Carlo estimates carry a standard error.

        A Monte-Carlo estimate may still report zero: searched suprema are
        lower bounds without error bars, and integrands that are constant on
        every sampled shell have zero sample variance.
        """
        if self.stderr < 0:
            raise ValueError("stderr must be nonnegative")
        if self.method is not EstimateMethod.MONTE_CARLO and self.stderr != 0.0:
            raise ValueError("Only Monte-Carlo estimates carry a standard error")
        return self

    @property
    def is_monte_carlo(self) -> bool:
        return self.method is EstimateMethod.MONTE_CARLO

    def __sub__(self, other: "Estimate") -> "Estimate":
        method = (
            EstimateMethod.MONTE_CARLO
            if self.is_monte_carlo or other.is_monte_carlo
            else EstimateMethod.RADIAL_QUADRATURE
        )
        return Estimate(
            value=self.value - other.value,
            stderr=float((self.stderr**2 + other.stderr**2) ** 0.5),
            method=method,
            atom=self.atom - other.atom,
            samples=self.samples + other.samples,
        )

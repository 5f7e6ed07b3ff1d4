"""
Simple currents g * (dd^c v_1)^k_1 ^ ... ^ (dd^c v_r)^k_r ^ beta^j.
"""

from dataclasses import dataclass

from numpy.typing import ArrayLike

from services.hermitian import Setting

from .exceptions import BidimensionError
from .functions import ModelFunction, PoleComponent, fundamental_solution


@dataclass(frozen=True)
class SimpleCurrent:
    """
    A current of bidegree (q + j, q + j) with explicit density.

    ``coefficient`` is None for the constant 1. Every dd^c factor is
    closed, so dd^c T only involves the coefficient.

    Example:
        >>> setting = Setting(n=3, m=2)
        >>> fund = fundamental_solution(setting)
        >>> SimpleCurrent(setting, None, ((fund, 1),)).bidimension
        2
    """

    setting: Setting
    coefficient: ModelFunction | None
    factors: tuple[tuple[ModelFunction, int], ...]
    beta_power: int = 0

    def __post_init__(self) -> None:
        n = self.setting.n
        if self.beta_power < 0:
            raise BidimensionError(f"beta power must be >= 0, got {self.beta_power}")
        for function, multiplicity in self.factors:
            if multiplicity < 0:
                raise BidimensionError(f"dd^c multiplicity must be >= 0, got {multiplicity}")
            if function.dim != n:
                raise BidimensionError(f"Factor dimension {function.dim} does not match n={n}")
        if self.coefficient is not None and self.coefficient.dim != n:
            raise BidimensionError(
                f"Coefficient dimension {self.coefficient.dim} does not match n={n}"
            )
        if self.degree > n:
            raise BidimensionError(
                f"Total degree q + j = {self.degree} exceeds n = {n}"
            )

    @property
    def ddc_degree(self) -> int:
        """q, the total dd^c multiplicity."""
        return sum(multiplicity for _, multiplicity in self.factors)

    @property
    def degree(self) -> int:
        return self.ddc_degree + self.beta_power

    @property
    def bidimension(self) -> int:
        """p = n - q - j."""
        return self.setting.n - self.degree

    @property
    def lelong_exponent(self) -> float:
        return self.setting.lelong_exponent(self.bidimension)

    def require_lelong(self) -> None:
        """
        Raises:
            BidimensionError: If m + p < n.
        """
        if self.setting.m + self.bidimension < self.setting.n:
            raise BidimensionError(
                f"m-Lelong function needs m + p >= n, got m={self.setting.m}, "
                f"p={self.bidimension}, n={self.setting.n}"
            )

    def ddc(self) -> "SimpleCurrent | None":
        """dd^c T by Leibniz; None when it vanishes identically."""
        if self.coefficient is None or self.bidimension == 0:
            return None
        return SimpleCurrent(
            setting=self.setting,
            coefficient=None,
            factors=((self.coefficient, 1),) + self.factors,
            beta_power=self.beta_power,
        )

    def with_kernel(self, a: ArrayLike, power: int) -> "SimpleCurrent":
        """T ^ beta^(n-m) ^ (dd^c phi_m(. - a))^power."""
        kernel = fundamental_solution(self.setting, a)
        factors = self.factors + (((kernel, power),) if power > 0 else ())
        return SimpleCurrent(
            setting=self.setting,
            coefficient=self.coefficient,
            factors=factors,
            beta_power=self.beta_power + self.setting.n - self.setting.m,
        )

    def poles(self) -> tuple[PoleComponent, ...]:
        seen: dict[PoleComponent, None] = {}
        functions = [function for function, k in self.factors if k > 0]
        if self.coefficient is not None:
            functions.append(self.coefficient)
        for function in functions:
            for component in function.poles():
                seen.setdefault(component, None)
        return tuple(seen)

    def is_radial_about(self, a: ArrayLike) -> bool:
        if self.coefficient is not None and not self.coefficient.is_radial_about(a):
            return False
        return all(function.is_radial_about(a) for function, k in self.factors if k > 0)


def ddc_of(current: SimpleCurrent) -> SimpleCurrent | None:
    """dd^c T, or None when T is closed."""
    return current.ddc()


def closed_current(
    setting: Setting, function: ModelFunction, power: int = 1, beta_power: int = 0
) -> SimpleCurrent:
    """(dd^c f)^power ^ beta^beta_power with constant coefficient."""
    return SimpleCurrent(
        setting=setting, coefficient=None, factors=((function, power),), beta_power=beta_power
    )

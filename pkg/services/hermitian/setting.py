"""
The (n, m) setting every computation runs in.
"""

from dataclasses import dataclass

import numpy as np
from django.conf import settings

from .exceptions import InvalidSettingError


@dataclass(frozen=True)
class Setting:
    """
    Complex dimension n and positivity index m.

    Example:
        >>> Setting(n=3, m=2).power
        0.5
        >>> Setting(n=3, m=2).lelong_exponent(p=2)
        3.0
    """

    n: int
    m: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int | np.integer) or not isinstance(self.m, int | np.integer):
            raise InvalidSettingError(f"n and m must be integers, got n={self.n!r}, m={self.m!r}")
        if self.n < 2:
            raise InvalidSettingError(f"n must be at least 2, got n={self.n}")
        if not 1 <= self.m < self.n:
            raise InvalidSettingError(
                f"m must satisfy 1 <= m < n, got n={self.n}, m={self.m}"
            )

    @classmethod
    def from_settings(cls) -> "Setting":
        """Build the default setting from ``settings.LAB_SETTING``."""
        lab_setting = getattr(settings, "LAB_SETTING", {})
        return cls(n=int(lab_setting.get("N", 3)), m=int(lab_setting.get("M", 2)))

    @property
    def power(self) -> float:
        """The exponent s = n/m - 1 of the fundamental solution."""
        return self.n / self.m - 1.0

    def weight(self, r: float) -> float:
        """The radial weight phi_m(r) = -(1/s) r^(-2s)."""
        s = self.power
        return -(r ** (-2.0 * s)) / s

    def lelong_exponent(self, p: int) -> float:
        """Normalizing exponent (2n/m)(m + p - n) of the m-Lelong function."""
        return (2.0 * self.n / self.m) * (self.m + p - self.n)

    @property
    def exponent_upper(self) -> float:
        """nm/(n - m): integrability exponent of the fundamental solution."""
        return self.n * self.m / (self.n - self.m)

    @property
    def exponent_lower(self) -> float:
        """n/(n - m): universal lower bound on integrability exponents."""
        return self.n / (self.n - self.m)

    @property
    def ratio_law(self) -> float:
        """Expected limit ratio of ball to sphere means, n/(n + 1 - n/m)."""
        return self.n / (self.n + 1.0 - self.n / self.m)

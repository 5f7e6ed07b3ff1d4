"""
Hessian measures and the point-mass bound.
"""

import logging

from numpy.typing import ArrayLike

from services.catalog import ModelFunction, as_point, closed_current
from services.hermitian import Setting
from services.integrate import Estimate, MCConfig, ball_current_mass

from .config import LelongConfig
from .extrapolation import extrapolate
from .profiles import lelong_number
from .schemas import HYPOTHESIS_UNVERIFIED, PointMassReport, point_reals

logger = logging.getLogger(__name__)


def hessian_measure_mass(
    setting: Setting,
    function: ModelFunction,
    a: ArrayLike,
    r: float,
    config: MCConfig | None = None,
) -> Estimate:
    """
    Mass of (dd^c f)^m ^ beta^(n-m) over B(a, r).

    Example:
        >>> from services.catalog import fundamental_solution
        >>> setting = Setting(n=3, m=2)
        >>> mass = hessian_measure_mass(setting, fundamental_solution(setting), [0] * 3, 0.1)
        >>> round(mass.value, 9), round(mass.atom, 9)
        (1.0, 1.0)
    """
    current = closed_current(setting, function, power=setting.m, beta_power=setting.n - setting.m)
    return ball_current_mass(current, a, r, config)


def point_mass(
    setting: Setting,
    function: ModelFunction,
    a: ArrayLike,
    config: MCConfig | None = None,
    lelong_config: LelongConfig | None = None,
) -> PointMassReport:
    """
    Atom of the Hessian measure at a against nu(dd^c f, a).

    The bound nu <= atom^(1/m) is reported as a test of an unproved claim.
    Sampled paths cannot resolve atoms, so the atom is only computed when
    f is radial about a; otherwise atom, bound and verdict are None.
    """
    lelong_config = lelong_config or LelongConfig()
    center = as_point(a, setting.n)
    estimate, _ = lelong_number(closed_current(setting, function), center, config, lelong_config)
    nu = estimate.nu

    if not function.is_radial_about(center):
        logger.info("Point mass skipped: function is not radial about the center")
        return PointMassReport(
            center=point_reals(center), atom=None, nu=nu, bound=None, satisfied=None
        )

    radii = lelong_config.fit_radii()
    masses = [hessian_measure_mass(setting, function, center, float(r), config) for r in radii]
    atom, _, _ = extrapolate(
        radii, [e.value for e in masses], [e.stderr for e in masses], lelong_config.sigma
    )
    if not isinstance(atom, float):
        return PointMassReport(
            center=point_reals(center), atom=None, nu=nu, bound=None, satisfied=None
        )
    atom = max(atom, 0.0)
    bound = atom ** (1.0 / setting.m)
    satisfied = None
    if estimate.converged:
        satisfied = float(nu) <= bound + lelong_config.atom_tolerance
    return PointMassReport(
        center=point_reals(center),
        atom=atom,
        nu=nu,
        bound=bound,
        satisfied=satisfied,
        hypothesis=HYPOTHESIS_UNVERIFIED,
    )

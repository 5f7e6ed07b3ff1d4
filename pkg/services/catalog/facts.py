"""
The named catalog: model functions and currents with their known facts.

Every fact recorded here is either read off a closed form (``DERIVED``),
quoted from the literature (``LITERATURE``), or immediate (``TRIVIAL``).
The verify suite and the ``catalog`` command both read this module.
"""

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from services.hermitian import Setting

from .currents import SimpleCurrent
from .functions import (
    ModelFunction,
    Point,
    Profile,
    ScaledSum,
    cylindrical,
    fundamental_solution,
    radial,
)

UNBOUNDED = "unbounded"

FUND_SCALE = 2.5
TWO_POLE_WEIGHTS = (1.0, 2.0)
TWO_POLE_OFFSET = 0.5
MILDER_POLE_OFFSET = 0.6
JENSEN_COEFFICIENT_FRACTION = 0.3


class Provenance(str, Enum):
    """Where a known fact comes from."""

    LITERATURE = "literature"
    DERIVED = "derived"
    TRIVIAL = "trivial"


@dataclass(frozen=True)
class KnownFacts:
    """
    Analytic facts about a catalog function.

    ``lelong_at_pole`` and ``iota_at_pole`` refer to ``pole``; the full
    list of (pole, nu) pairs is in ``pole_lelong``.
    """

    lelong_at_pole: float | None
    iota_at_pole: float | str | None
    msh_max_order: int
    pole: tuple[complex, ...] | None = None
    pole_lelong: tuple[tuple[tuple[complex, ...], float], ...] = ()
    bounded: bool = False

    @property
    def pole_point(self) -> Point | None:
        return None if self.pole is None else np.asarray(self.pole, dtype=np.complex128)


@dataclass(frozen=True)
class CatalogEntry:
    """A named model function."""

    name: str
    function: ModelFunction
    facts: KnownFacts
    provenance: Provenance
    description: str = ""


@dataclass(frozen=True)
class CurrentEntry:
    """A named simple current with its expected Lelong behavior."""

    name: str
    current: SimpleCurrent
    provenance: Provenance
    description: str = ""
    expected_nu: float | str | None = None
    tags: tuple[str, ...] = field(default_factory=tuple)


def _offset_point(n: int, x: float) -> tuple[complex, ...]:
    return (complex(x),) + (0j,) * (n - 1)


def radial_power_max_order(n: int, s: float, block: int | None = None) -> int:
    """
    Largest m with power(s) m-sh over a block of size ``block`` (n if None).

    Example:
        >>> radial_power_max_order(3, 0.5)
        2
    """
    block = n if block is None else block
    orders = [m for m in range(1, n + 1) if s <= block / m - 1.0 + 1e-12]
    return max(orders) if orders else 0


def catalog_entries(setting: Setting) -> list[CatalogEntry]:
    """
    The named function catalog for a setting.

    The cylinder entry only exists when 2 <= m <= n - 2.

    Example:
        >>> [e.name for e in catalog_entries(Setting(n=3, m=2))][:3]
        ['fund', 'fund-scaled', 'radlog']
    """
    n, m = setting.n, setting.m
    s = setting.power
    origin = (0j,) * n
    fund = fundamental_solution(setting)
    iota_fund = setting.exponent_upper

    entries = [
        CatalogEntry(
            name="fund",
            function=fund,
            facts=KnownFacts(
                lelong_at_pole=1.0,
                iota_at_pole=iota_fund,
                msh_max_order=m,
                pole=origin,
                pole_lelong=((origin, 1.0),),
            ),
            provenance=Provenance.LITERATURE,
            description="Fundamental solution of the complex Hessian equation",
        ),
        CatalogEntry(
            name="fund-scaled",
            function=fund.scaled(FUND_SCALE),
            facts=KnownFacts(
                lelong_at_pole=FUND_SCALE,
                iota_at_pole=iota_fund,
                msh_max_order=m,
                pole=origin,
                pole_lelong=((origin, FUND_SCALE),),
            ),
            provenance=Provenance.DERIVED,
            description=f"{FUND_SCALE} times the fundamental solution",
        ),
        CatalogEntry(
            name="radlog",
            function=radial(Profile.log(), n),
            facts=KnownFacts(
                lelong_at_pole=0.0,
                iota_at_pole=UNBOUNDED,
                msh_max_order=n,
                pole=origin,
                pole_lelong=((origin, 0.0),),
            ),
            provenance=Provenance.DERIVED,
            description="log |z|^2, plurisubharmonic with zero m-Lelong number for m < n",
        ),
        CatalogEntry(
            name="quad-shifted",
            function=radial(Profile.affine(-1.0, 1.0), n),
            facts=KnownFacts(
                lelong_at_pole=0.0,
                iota_at_pole=UNBOUNDED,
                msh_max_order=n,
                bounded=True,
            ),
            provenance=Provenance.LITERATURE,
            description="|z|^2 - 1, bounded and negative on the unit ball",
        ),
    ]

    if 2 <= m <= n - 2:
        k = n - 1
        entries.append(
            CatalogEntry(
                name="cylinder",
                function=cylindrical(Profile.power(k / m - 1.0), n, k),
                facts=KnownFacts(
                    lelong_at_pole=0.0,
                    iota_at_pole=m * k / (k - m),
                    msh_max_order=m,
                    pole=origin,
                    pole_lelong=((origin, 0.0),),
                ),
                provenance=Provenance.LITERATURE,
                description="Tube singularity whose exponent exceeds nm/(n-m)",
            )
        )

    milder = s / 2.0
    entries.append(
        CatalogEntry(
            name="milder",
            function=radial(Profile.power(milder), n),
            facts=KnownFacts(
                lelong_at_pole=0.0,
                iota_at_pole=n / milder,
                msh_max_order=radial_power_max_order(n, milder),
                pole=origin,
                pole_lelong=((origin, 0.0),),
            ),
            provenance=Provenance.DERIVED,
            description="Radial power with half the fundamental exponent",
        )
    )

    left = _offset_point(n, TWO_POLE_OFFSET)
    right = _offset_point(n, -TWO_POLE_OFFSET)
    first, second = TWO_POLE_WEIGHTS
    entries.append(
        CatalogEntry(
            name="two-pole",
            function=ScaledSum(
                terms=(
                    (first, fundamental_solution(setting, left)),
                    (second, fundamental_solution(setting, right)),
                )
            ),
            facts=KnownFacts(
                lelong_at_pole=first,
                iota_at_pole=iota_fund,
                msh_max_order=m,
                pole=left,
                pole_lelong=((left, first), (right, second)),
            ),
            provenance=Provenance.DERIVED,
            description="Two shifted fundamental solutions with weights 1 and 2",
        )
    )

    milder_center = _offset_point(n, MILDER_POLE_OFFSET)
    entries.append(
        CatalogEntry(
            name="fund-plus-milder",
            function=ScaledSum(
                terms=(
                    (1.0, fund),
                    (1.0, radial(Profile.power(milder), n, milder_center)),
                )
            ),
            facts=KnownFacts(
                lelong_at_pole=1.0,
                iota_at_pole=iota_fund,
                msh_max_order=m,
                pole=origin,
                pole_lelong=((origin, 1.0), (milder_center, 0.0)),
            ),
            provenance=Provenance.DERIVED,
            description="Fundamental solution plus a milder pole elsewhere",
        )
    )
    return entries


def catalog_entry(setting: Setting, name: str) -> CatalogEntry:
    """
    Look up an entry by name.

    Raises:
        KeyError: If no entry has that name in this setting.
    """
    for entry in catalog_entries(setting):
        if entry.name == name:
            return entry
    raise KeyError(name)


def catalog_currents(setting: Setting) -> list[CurrentEntry]:
    """
    The named current catalog: calibration, closed currents, T0-type and
    coefficient currents used by the Lelong and Lelong-Jensen checks.
    """
    n, m = setting.n, setting.m
    s = setting.power
    fund = fundamental_solution(setting)
    quad = radial(Profile.affine(0.0, 1.0), n)

    return [
        CurrentEntry(
            name="ddc-quad",
            current=SimpleCurrent(setting, None, ((quad, 1),)),
            provenance=Provenance.DERIVED,
            description="dd^c |z|^2 = beta, the calibration current",
            expected_nu=0.0,
            tags=("closed", "certified"),
        ),
        CurrentEntry(
            name="ddc-fund",
            current=SimpleCurrent(setting, None, ((fund, 1),)),
            provenance=Provenance.DERIVED,
            description="dd^c of the fundamental solution",
            expected_nu=1.0,
            tags=("closed", "certified"),
        ),
        CurrentEntry(
            name="ddc-radlog",
            current=SimpleCurrent(setting, None, ((radial(Profile.log(), n), 1),)),
            provenance=Provenance.DERIVED,
            description="dd^c log |z|^2",
            expected_nu=0.0,
            tags=("closed", "certified"),
        ),
        CurrentEntry(
            name="t0",
            current=SimpleCurrent(setting, fund, ((fund, m - 1),)),
            provenance=Provenance.LITERATURE,
            description="Fundamental solution times (dd^c of itself)^(m-1); no Lelong number",
            expected_nu="does-not-converge",
            tags=("negative",),
        ),
        CurrentEntry(
            name="mild-coefficient",
            current=SimpleCurrent(setting, radial(Profile.affine(-1.0, 1.0), n), ((fund, m - 1),)),
            provenance=Provenance.DERIVED,
            description="(|z|^2 - 1) (dd^c fund)^(m-1); converges to -1",
            expected_nu=-1.0,
            tags=("negative",),
        ),
        CurrentEntry(
            name="jensen-nonclosed",
            current=SimpleCurrent(
                setting,
                radial(Profile.power(JENSEN_COEFFICIENT_FRACTION * s), n),
                ((fund, m - 1),),
                beta_power=1,
            ),
            provenance=Provenance.DERIVED,
            description="Power coefficient times (dd^c fund)^(m-1) ^ beta",
            tags=("jensen",),
        ),
    ]

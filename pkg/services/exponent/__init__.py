"""
Integrability-exponent service.

Sublevel volumes over compact regions, the tail-slope and integral-scan
estimators of the integrability exponent, the infimum over a compact set,
and the checks relating exponents to Lelong numbers.
"""

from .bounds import bounds_report, markov_bound
from .config import ExponentConfig
from .exceptions import ExponentError, MissingPoleError, NotNegativeOnRegionError
from .regions import CompactRegion
from .scan import compact_infimum, integrability_exponent, power_integral
from .schemas import (
    UNBOUNDED,
    BoundsReport,
    ExponentEstimate,
    ExponentMethod,
    MarkovReport,
    PointExponent,
    SublevelEstimate,
    TailFit,
    VolumeMethod,
)
from .sublevel import lens_volume, sublevel_volume, sublevel_volumes, tube_volume
from .tail import tail_exponent, tail_levels

__all__ = [
    "UNBOUNDED",
    "BoundsReport",
    "CompactRegion",
    "ExponentConfig",
    "ExponentError",
    "ExponentEstimate",
    "ExponentMethod",
    "MarkovReport",
    "MissingPoleError",
    "NotNegativeOnRegionError",
    "PointExponent",
    "SublevelEstimate",
    "TailFit",
    "VolumeMethod",
    "bounds_report",
    "compact_infimum",
    "integrability_exponent",
    "lens_volume",
    "markov_bound",
    "power_integral",
    "sublevel_volume",
    "sublevel_volumes",
    "tail_exponent",
    "tail_levels",
    "tube_volume",
]

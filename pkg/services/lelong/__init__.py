"""
Lelong service.

m-Lelong functions and numbers of simple currents, extrapolation to r -> 0,
the mean-value and supremum growth characterizations, the Lelong-Jensen
identity, negative currents, Hessian point masses and Lelong maps.
"""

from .config import LelongConfig, radius_grid
from .exceptions import BidimensionError, InvalidGridError, LelongError, NotNegativeError
from .extrapolation import extrapolate
from .hessian import hessian_measure_mass, point_mass
from .jensen import jensen_residual, lelong_jensen, negative_current_check, residual_scale
from .means import (
    calibration_constant,
    convexity,
    green_identity,
    lelong_map,
    lower_bound_at_finite_points,
    mean_value_ratios,
    radial_weight,
    sup_growth,
)
from .profiles import (
    estimate_from_profile,
    lelong_function,
    lelong_number,
    profile_ratio,
    write_profile_csv,
)
from .schemas import (
    DOES_NOT_CONVERGE,
    HYPOTHESIS_UNVERIFIED,
    FitDiagnostics,
    FitModel,
    GreenIdentityReport,
    JensenReport,
    LelongEstimate,
    LelongMap,
    LelongMapEntry,
    LelongMethod,
    LelongProfile,
    MeanValueReport,
    NegativeCurrentReport,
    PointMassReport,
    SubMeanValueReport,
    SupGrowthReport,
)

__all__ = [
    "DOES_NOT_CONVERGE",
    "HYPOTHESIS_UNVERIFIED",
    "BidimensionError",
    "FitDiagnostics",
    "FitModel",
    "GreenIdentityReport",
    "InvalidGridError",
    "JensenReport",
    "LelongConfig",
    "LelongError",
    "LelongEstimate",
    "LelongMap",
    "LelongMapEntry",
    "LelongMethod",
    "LelongProfile",
    "MeanValueReport",
    "NegativeCurrentReport",
    "NotNegativeError",
    "PointMassReport",
    "SubMeanValueReport",
    "SupGrowthReport",
    "calibration_constant",
    "convexity",
    "estimate_from_profile",
    "extrapolate",
    "green_identity",
    "hessian_measure_mass",
    "lelong_function",
    "jensen_residual",
    "lelong_jensen",
    "lelong_map",
    "lelong_number",
    "lower_bound_at_finite_points",
    "mean_value_ratios",
    "negative_current_check",
    "point_mass",
    "profile_ratio",
    "radial_weight",
    "radius_grid",
    "residual_scale",
    "sup_growth",
    "write_profile_csv",
]

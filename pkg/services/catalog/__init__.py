"""
Model-function catalog service.

Provides radial, cylindrical and summed model functions with closed-form
Hessians, simple currents, m-subharmonicity classification, the named
catalog with its known facts, and the function-spec grammar.
"""

from .classify import MshClass, certified_m_positive, msh_classify, msh_max_order
from .currents import SimpleCurrent, closed_current, ddc_of
from .exceptions import (
    BidimensionError,
    CatalogError,
    SingularPointError,
    SpecSemanticError,
    SpecSyntaxError,
)
from .facts import (
    UNBOUNDED,
    CatalogEntry,
    CurrentEntry,
    KnownFacts,
    Provenance,
    catalog_currents,
    catalog_entries,
    catalog_entry,
)
from .functions import (
    CylindricalFunction,
    ModelFunction,
    PoleComponent,
    Profile,
    ProfileKind,
    RadialFunction,
    ScaledSum,
    as_point,
    complex_hessian,
    cylindrical,
    evaluate,
    fundamental_solution,
    gradient,
    laplacian,
    point_from_reals,
    radial,
)
from .grammar import parse_function_spec, render

__all__ = [
    "UNBOUNDED",
    "BidimensionError",
    "CatalogEntry",
    "CatalogError",
    "CurrentEntry",
    "CylindricalFunction",
    "KnownFacts",
    "ModelFunction",
    "MshClass",
    "PoleComponent",
    "Profile",
    "ProfileKind",
    "Provenance",
    "RadialFunction",
    "ScaledSum",
    "SimpleCurrent",
    "SingularPointError",
    "SpecSemanticError",
    "SpecSyntaxError",
    "as_point",
    "catalog_currents",
    "catalog_entries",
    "catalog_entry",
    "certified_m_positive",
    "closed_current",
    "complex_hessian",
    "cylindrical",
    "ddc_of",
    "evaluate",
    "fundamental_solution",
    "gradient",
    "laplacian",
    "msh_classify",
    "msh_max_order",
    "parse_function_spec",
    "point_from_reals",
    "radial",
    "render",
]

"""
Integration service.

Sphere and ball means, ball suprema and the masses of simple currents
over balls and annuli, by closed forms where the geometry allows and by
seeded, stratified Monte Carlo otherwise.
"""

from services.catalog import SimpleCurrent

from .config import MCConfig
from .density import hessian_density, wedge_constant
from .exceptions import DivergentIntegralError, IntegrationError, InvalidRegionError
from .masses import annulus_current_mass, ball_current_mass
from .means import ball_mean, ball_sup, sphere_mean
from .schemas import Estimate, EstimateMethod

__all__ = [
    "DivergentIntegralError",
    "Estimate",
    "EstimateMethod",
    "IntegrationError",
    "InvalidRegionError",
    "MCConfig",
    "SimpleCurrent",
    "annulus_current_mass",
    "ball_current_mass",
    "ball_mean",
    "ball_sup",
    "hessian_density",
    "sphere_mean",
    "wedge_constant",
]

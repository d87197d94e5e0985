"""Random triangles circumscribing the unit circle: exact laws, sampling, extremal problems."""
from . import analytic, geometry, numerics, optimize, sampling
from .analytic import DensityModel, cdf, density, median, quantile
from .numerics import QuadratureSpec

__version__ = "0.1.0"

__all__ = [
    "analytic",
    "geometry",
    "numerics",
    "optimize",
    "sampling",
    "DensityModel",
    "QuadratureSpec",
    "cdf",
    "density",
    "median",
    "quantile",
]

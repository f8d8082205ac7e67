"""Exact Hirzebruch-Milnor, spectrum and arrangement calculus for projective
hypersurfaces."""

__version__ = "0.1.0"

from .errors import HMError, IdentityViolation
from .rings import FracExpPoly, XSeries, XYSeries, YPoly, qy_series
from .projspace import (
    HomologyClass,
    YClass,
    cap_hyperplane,
    cap_series,
    ci_chern_class,
    ci_chi_y_virtual,
    ci_euler,
    hirzebruch_class_of_linear_subspace,
)
from .milnor import EMData, example_2_8, milnor_class_direct, milnor_class_iterated
from .spectrum import Spectrum, brieskorn_pham, sp_power, ts_product
from .spectral import IsolatedHypersurfaceModel, chi_y, hm_y_class
from .arrangement import Arrangement, arrangement_class, arrangement_euler, lattice

__all__ = [
    "Arrangement",
    "EMData",
    "FracExpPoly",
    "HMError",
    "HomologyClass",
    "IdentityViolation",
    "IsolatedHypersurfaceModel",
    "Spectrum",
    "XSeries",
    "XYSeries",
    "YClass",
    "YPoly",
    "arrangement_class",
    "arrangement_euler",
    "brieskorn_pham",
    "cap_hyperplane",
    "cap_series",
    "chi_y",
    "ci_chern_class",
    "ci_chi_y_virtual",
    "ci_euler",
    "example_2_8",
    "hirzebruch_class_of_linear_subspace",
    "hm_y_class",
    "lattice",
    "milnor_class_direct",
    "milnor_class_iterated",
    "qy_series",
    "sp_power",
    "ts_product",
]

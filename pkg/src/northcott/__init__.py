"""Where the Northcott property holds or fails for values of Dedekind zeta functions."""

from .boundary import BoundaryCurve, Subinterval, build_boundary, fit_circle_radius, sigma1
from .config import CONSTANTS, DEFAULT_CONFIG, PUBLISHED_TABLE_CONSTANTS, Constants, NumericsConfig
from .criteria import Verdict, VerdictKind, classify, non_northcott_condition, northcott_condition
from .critstrip import b_threshold, i_integral, moment_constant
from .counting import CountBoundInput, a_s, count_bound
from .radii import RadiiRow, non_northcott_radius, rho_even, rho_odd, tau0, tau_threshold
from .ratios import GammaRatios, gamma_c_ratio, gamma_m, gamma_r_ratio

__all__ = [
    "BoundaryCurve",
    "CONSTANTS",
    "Constants",
    "CountBoundInput",
    "DEFAULT_CONFIG",
    "GammaRatios",
    "NumericsConfig",
    "PUBLISHED_TABLE_CONSTANTS",
    "RadiiRow",
    "Subinterval",
    "Verdict",
    "VerdictKind",
    "a_s",
    "b_threshold",
    "build_boundary",
    "classify",
    "count_bound",
    "fit_circle_radius",
    "gamma_c_ratio",
    "gamma_m",
    "gamma_r_ratio",
    "i_integral",
    "moment_constant",
    "non_northcott_condition",
    "non_northcott_radius",
    "northcott_condition",
    "rho_even",
    "rho_odd",
    "sigma1",
    "tau0",
    "tau_threshold",
]

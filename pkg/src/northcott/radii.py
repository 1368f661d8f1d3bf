"""Closed-form constants and radii around the negative integers.

All quantities are built from D_m / 2pi = 2 e^gamma, D_M, gamma and zeta at
real arguments. With ``config.extended`` the same formulas run on mpmath at
``config.working_precision`` digits; the double-precision path is the default.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from types import SimpleNamespace
from typing import Optional

from . import specfun
from .config import _D_M_FACTORS, CONSTANTS, DEFAULT_CONFIG, EULER_GAMMA, LOG_D_M, Constants, NumericsConfig
from .errors import CoveringError, DomainError

SIGMA0 = -1.5
ASINH_LINEAR_BELOW = 1e-8


def _mp_log_d_M(mpmath):
    return sum(mpmath.mpf(num) / den * mpmath.log(p) for p, num, den in _D_M_FACTORS)


class _Backend:
    """Context manager yielding a math namespace plus the constants in use.

    The namespace carries ``log_ratio_m`` = log(2pi/D_m), ``log_d_M`` and
    ``tau0``. Double precision uses ``math`` and ``specfun``; extended
    precision uses mpmath at the configured number of digits.
    """

    def __init__(self, config: NumericsConfig, constants: Constants):
        self.config = config
        self.constants = constants
        self._saved = None

    def __enter__(self):
        c = self.constants
        if self.config.extended:
            import mpmath

            self._saved = mpmath.mp.dps
            mpmath.mp.dps = self.config.working_precision + 5
            b = SimpleNamespace(
                pi=mpmath.pi,
                exp=mpmath.exp,
                log=mpmath.log,
                sqrt=mpmath.sqrt,
                asin=mpmath.asin,
                asinh=mpmath.asinh,
                atanh=mpmath.atanh,
                cosh=mpmath.cosh,
                cos=mpmath.cos,
                tanh=mpmath.tanh,
                zeta=mpmath.zeta,
                loggamma=mpmath.loggamma,
                mpf=mpmath.mpf,
            )
            if c.exact:
                b.euler = mpmath.euler
                b.log_ratio_m = -mpmath.euler - mpmath.log(2)
                b.log_d_M = _mp_log_d_M(mpmath)
            else:
                b.euler = mpmath.mpf(c.euler_gamma)
                b.log_ratio_m = mpmath.log(2 * mpmath.pi / mpmath.mpf(c.d_m))
                b.log_d_M = mpmath.log(mpmath.mpf(c.d_M))
        else:
            b = SimpleNamespace(
                pi=math.pi,
                exp=math.exp,
                log=math.log,
                sqrt=math.sqrt,
                asin=math.asin,
                asinh=math.asinh,
                atanh=math.atanh,
                cosh=math.cosh,
                cos=math.cos,
                tanh=math.tanh,
                zeta=specfun.zeta_real,
                loggamma=specfun.log_abs_gamma,
                mpf=float,
                euler=c.euler_gamma,
            )
            if c.exact:
                b.log_ratio_m = -EULER_GAMMA - math.log(2.0)
                b.log_d_M = LOG_D_M
            else:
                b.log_ratio_m = math.log(2.0 * math.pi / c.d_m)
                b.log_d_M = math.log(c.d_M)
        b.tau0 = _tau0(b) if c.tau0 is None else b.mpf(c.tau0)
        return b

    def __exit__(self, *exc):
        if self._saved is not None:
            import mpmath

            mpmath.mp.dps = self._saved
            self._saved = None
        return False


def _backend(config: NumericsConfig, constants: Constants = CONSTANTS) -> _Backend:
    return _Backend(config, constants)


# -- tau_0 and friends -----------------------------------------------------------


def _tau0(b):
    # tanh(pi tau_0 / 2) = zeta(5/2) / (3 sqrt 2 e^{2 gamma})
    t = b.zeta(b.mpf(5) / 2) / (3 * b.sqrt(b.mpf(2)) * b.exp(2 * b.euler))
    return 2 / b.pi * b.atanh(t)


def tau0(config: NumericsConfig = DEFAULT_CONFIG, constants: Constants = CONSTANTS) -> float:
    """Height above which the strip sigma < -1.5 is Northcott."""
    with _backend(config, constants) as b:
        return float(b.tau0)


def cosh_pi_tau0(config: NumericsConfig = DEFAULT_CONFIG, constants: Constants = CONSTANTS) -> float:
    with _backend(config, constants) as b:
        return float(b.cosh(b.pi * b.tau0))


def cosh_pi_tau0_closed_form(config: NumericsConfig = DEFAULT_CONFIG) -> float:
    """(18 e^{4 gamma} + zeta(5/2)^2) / (18 e^{4 gamma} - zeta(5/2)^2)."""
    with _backend(config) as b:
        z2 = b.zeta(b.mpf(5) / 2) ** 2
        e4 = 18 * b.exp(4 * b.euler)
        return float((e4 + z2) / (e4 - z2))


def cover_radius(config: NumericsConfig = DEFAULT_CONFIG, constants: Constants = CONSTANTS) -> float:
    """sqrt(1/4 + tau_0^2): radius needed to cover the strip |tau| <= tau_0."""
    with _backend(config, constants) as b:
        return float(b.sqrt(b.mpf(1) / 4 + b.tau0**2))


# -- even centers --------------------------------------------------------------


def _check_positive(n, minimum=1):
    if int(n) != n or n < minimum:
        raise DomainError(f"n must be an integer >= {minimum}, got {n!r}")


def _log_c_c(b, k):
    # log of pi (2pi/D_m)^{2k} zeta(k + 1/2)^2 / Gamma(k + 1/2)^2 cosh(pi tau_0)
    half = b.mpf(1) / 2
    return (
        b.log(b.pi)
        + 2 * k * b.log_ratio_m
        + 2 * b.log(b.zeta(k + half))
        - 2 * b.loggamma(k + half)
        + b.log(b.cosh(b.pi * b.tau0))
    )


def _log_c_r(b, n):
    # log of sqrt(pi/2) (2pi/D_m)^{2n} zeta(2n + 1/2) / Gamma(2n + 1/2) cosh(pi tau_0 / 2)
    half = b.mpf(1) / 2
    k = 2 * n
    return (
        half * (b.log(b.pi) - b.log(b.mpf(2)))
        + k * b.log_ratio_m
        + b.log(b.zeta(k + half))
        - b.loggamma(k + half)
        + b.log(b.cosh(b.pi * b.tau0 / 2))
    )


def c_c(n: int, config: NumericsConfig = DEFAULT_CONFIG, constants: Constants = CONSTANTS) -> float:
    _check_positive(n)
    with _backend(config, constants) as b:
        return float(b.exp(_log_c_c(b, 2 * n)))


def c_r(n: int, config: NumericsConfig = DEFAULT_CONFIG, constants: Constants = CONSTANTS) -> float:
    _check_positive(n)
    with _backend(config, constants) as b:
        return float(b.exp(_log_c_r(b, n)))


def _even_pieces(b, n):
    cc = b.exp(_log_c_c(b, 2 * n))
    cr = b.exp(_log_c_r(b, n))
    if cc >= 1 or cr >= 1:
        raise DomainError(f"no radius around -{2 * n}: C_C = {float(cc)}, C_R = {float(cr)}")
    return b.asin(cc) / b.pi, 2 * b.asin(cr) / b.pi


def covering_margins(n: int, config: NumericsConfig = DEFAULT_CONFIG, constants: Constants = CONSTANTS) -> tuple[float, float]:
    """(1 - asin(C_C(n))/pi, 2 - 2 asin(C_R(n))/pi): upper limits on the radius."""
    _check_positive(n)
    with _backend(config, constants) as b:
        rho_c, rho_r = _even_pieces(b, n)
        return float(1 - rho_c), float(2 - rho_r)


def covering_value(config: NumericsConfig = DEFAULT_CONFIG, constants: Constants = CONSTANTS) -> float:
    """The binding covering margin, attained at n = 1."""
    return covering_margins(1, config, constants)[0]


def rho_even(n: int, config: NumericsConfig = DEFAULT_CONFIG, constants: Constants = CONSTANTS) -> float:
    """Northcott radius around -2n from the even-circle bounds."""
    _check_positive(n)
    with _backend(config, constants) as b:
        rho_c, rho_r = _even_pieces(b, n)
        cover = b.sqrt(b.mpf(1) / 4 + b.tau0**2)
        if not cover < min(1 - rho_c, 2 - rho_r):
            raise CoveringError(f"circles around -{2 * n} do not cover |tau| <= tau_0")
        return float(max(rho_c, rho_r))


# -- odd centers ---------------------------------------------------------------


def rho_odd(n: int, config: NumericsConfig = DEFAULT_CONFIG, constants: Constants = CONSTANTS) -> float:
    """Northcott radius around -2n+1 (n >= 2) from the complex-ratio bound."""
    _check_positive(n, minimum=2)
    with _backend(config, constants) as b:
        arg = b.exp(_log_c_c(b, 2 * n - 1))
        if arg >= 1:
            raise DomainError(f"no radius: inner argument {float(arg)} >= 1")
        return float(b.asin(arg) / b.pi)


def odd_real_criterion(
    n: int,
    tau0_value: Optional[float] = None,
    config: NumericsConfig = DEFAULT_CONFIG,
    constants: Constants = CONSTANTS,
) -> tuple[bool, float]:
    """Whether the real-ratio bound alone settles the disc around -2n+1.

    Returns (holds, lhs). ``tau0_value`` replaces tau_0 for what-if evaluation.
    """
    _check_positive(n, minimum=2)
    with _backend(config, constants) as b:
        t0 = b.tau0 if tau0_value is None else b.mpf(tau0_value)
        k = 2 * n - b.mpf(1) / 2
        trig = abs(b.cos(b.pi / 2 * b.sqrt(b.mpf(1) / 4 + t0**2)) / b.cosh(b.pi * t0 / 2))
        log_lhs = (
            (b.log(b.mpf(2)) - b.log(b.pi)) / 2
            + b.loggamma(k)
            - b.log(b.zeta(k))
            - (2 * n - 1) * b.log_ratio_m
        )
        lhs = b.exp(log_lhs) * trig
        return bool(lhs > 1), float(lhs)


# -- non-Northcott radii -------------------------------------------------------


def _log_nn_arg(b, n):
    # log of pi / (Gamma(n+3/2)^2 zeta(n+1/2)^2) (2pi/D_M)^{2n+2}
    half = b.mpf(1) / 2
    return (
        b.log(b.pi)
        - 2 * b.loggamma(n + 3 * half)
        - 2 * b.log(b.zeta(n + half))
        + (2 * n + 2) * (b.log(2 * b.pi) - b.log_d_M)
    )


def log_non_northcott_argument(n: int, config: NumericsConfig = DEFAULT_CONFIG, constants: Constants = CONSTANTS) -> float:
    _check_positive(n)
    with _backend(config, constants) as b:
        return float(_log_nn_arg(b, n))


def non_northcott_radius(n: int, config: NumericsConfig = DEFAULT_CONFIG, constants: Constants = CONSTANTS) -> float:
    """Radius of the punctured disc around -n where Northcott fails for every B."""
    _check_positive(n)
    with _backend(config, constants) as b:
        log_y = _log_nn_arg(b, n)
        if log_y < math.log(ASINH_LINEAR_BELOW):
            # asinh(y) = y (1 - y^2/6 + ...), so the correction is below double rounding
            y = b.exp(log_y)
            return float(y * (1 - y * y / 6) / b.pi)
        return float(b.asinh(b.exp(log_y)) / b.pi)


# -- effective tau threshold ---------------------------------------------------


def _threshold_x(b, sigma):
    one = b.mpf(1)
    return b.exp(
        -(2 * sigma - 1) * b.log_ratio_m + 2 * b.log(b.zeta(one - sigma)) - 2 * b.loggamma(one - sigma)
    )


def tau_threshold_x(sigma: float, config: NumericsConfig = DEFAULT_CONFIG, constants: Constants = CONSTANTS) -> float:
    """(D_m/2pi)^{2 sigma - 1} zeta(1-sigma)^2 / Gamma(1-sigma)^2."""
    if not sigma < 0:
        raise DomainError(f"need sigma < 0, got {sigma!r}")
    with _backend(config, constants) as b:
        return float(_threshold_x(b, b.mpf(sigma)))


def tau_threshold(sigma: float, config: NumericsConfig = DEFAULT_CONFIG, constants: Constants = CONSTANTS) -> float:
    """|tau| above this value is Northcott at abscissa sigma < 0."""
    if not sigma < 0:
        raise DomainError(f"need sigma < 0, got {sigma!r}")
    with _backend(config, constants) as b:
        x = _threshold_x(b, b.mpf(sigma))
        if x == 0:
            return float(2 / b.pi)
        return float(x / b.tanh(b.pi * x / 2))


# -- table rows ----------------------------------------------------------------


@dataclass(frozen=True)
class RadiiRow:
    center: int
    closed_form_radius: Optional[float]
    non_northcott_radius: float
    numerical_radius: Optional[float] = None

    def __post_init__(self):
        if self.closed_form_radius is not None and not self.non_northcott_radius < self.closed_form_radius:
            raise ValueError("non-Northcott disc must sit inside the closed-form circle")


def closed_form_radius(
    center: int, config: NumericsConfig = DEFAULT_CONFIG, constants: Constants = CONSTANTS
) -> Optional[float]:
    """Closed-form Northcott radius around a negative integer; None at -1."""
    if int(center) != center or center > -1:
        raise DomainError(f"center must be a negative integer, got {center!r}")
    center = int(center)
    if center % 2 == 0:
        return rho_even(-center // 2, config, constants)
    n = (1 - center) // 2
    if n < 2:
        return None
    holds, _ = odd_real_criterion(n, config=config, constants=constants)
    if not holds:
        raise DomainError(f"real-ratio criterion fails around {center}")
    return rho_odd(n, config, constants)


def radii_row(
    center: int,
    numerical_radius: Optional[float] = None,
    config: NumericsConfig = DEFAULT_CONFIG,
    constants: Constants = CONSTANTS,
) -> RadiiRow:
    return RadiiRow(
        center=int(center),
        closed_form_radius=closed_form_radius(center, config, constants),
        non_northcott_radius=non_northcott_radius(-int(center), config, constants),
        numerical_radius=numerical_radius,
    )

"""Gamma-factor ratios from the Dedekind functional equation.

For Gamma_R(s) = pi^{-s/2} Gamma(s/2) and Gamma_C(s) = 2 (2 pi)^{-s} Gamma(s):

    gamma_r(s) = |Gamma_R(1-s) / Gamma_R(s)|
    gamma_c(s) = |Gamma_C(1-s) / Gamma_C(s)|^{1/2}
    gamma_m(s) = min(gamma_r, gamma_c)

Both ratios are evaluated in reflected form, so Gamma(s) is never in a
denominator and the zeros at the trivial zeros come out exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .specfun import as_point, log_abs_gamma, log_abs_sin_pi

_LOG_PI = math.log(math.pi)
_LOG_2PI = math.log(2.0 * math.pi)


@dataclass(frozen=True)
class GammaRatios:
    gamma_r: float
    gamma_c: float

    @property
    def gamma_m(self) -> float:
        return min(self.gamma_r, self.gamma_c)


def _check(s: complex) -> None:
    if s.real >= 1.0:
        raise DomainError(f"gamma-factor ratios need Re s < 1, got {s!r}")


def _is_nonpositive_integer(s: complex, step: int = 1) -> bool:
    return s.imag == 0.0 and s.real <= 0.0 and s.real == int(s.real) and int(s.real) % step == 0


def log_gamma_c_ratio(s) -> float:
    """log gamma_c(s); -inf at 0 and the negative integers."""
    s = as_point(s)
    _check(s)
    if _is_nonpositive_integer(s):
        return -math.inf
    sigma = s.real
    log_sq = (2.0 * sigma - 1.0) * _LOG_2PI + 2.0 * log_abs_gamma(1.0 - s) + log_abs_sin_pi(s) - _LOG_PI
    return 0.5 * log_sq


def gamma_c_ratio(s) -> float:
    lg = log_gamma_c_ratio(s)
    return 0.0 if lg == -math.inf else math.exp(lg)


def log_gamma_r_ratio(s) -> float:
    """log gamma_r(s); -inf at 0 and the negative even integers."""
    s = as_point(s)
    _check(s)
    if _is_nonpositive_integer(s, step=2):
        return -math.inf
    sigma = s.real
    return (
        (sigma - 0.5) * _LOG_PI
        + log_abs_gamma(0.5 * (1.0 - s))
        + log_abs_gamma(1.0 - 0.5 * s)
        + log_abs_sin_pi(0.5 * s)
        - _LOG_PI
    )


def gamma_r_ratio(s) -> float:
    lg = log_gamma_r_ratio(s)
    return 0.0 if lg == -math.inf else math.exp(lg)


def gamma_m(s) -> GammaRatios:
    s = as_point(s)
    return GammaRatios(gamma_r=gamma_r_ratio(s), gamma_c=gamma_c_ratio(s))


def log_gamma_m(s) -> float:
    s = as_point(s)
    return min(log_gamma_r_ratio(s), log_gamma_c_ratio(s))


def real_ratio_is_smaller(sigma: float) -> bool:
    """Whether gamma_r <= gamma_c on the whole vertical line Re s = sigma.

    gamma_r / gamma_c = |tan(pi s / 2)|^{1/2}, and |tan(x + iy)| <= 1 exactly
    when |sin x| <= |cos x|, independently of y. So the real ratio is the
    smaller one within 1/2 of an even integer.
    """
    x = 0.5 * math.pi * sigma
    return abs(math.sin(x)) <= abs(math.cos(x))

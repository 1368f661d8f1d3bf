"""Sufficient conditions for (non-)Northcott at a point and a combined verdict."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

from . import radii
from .config import LOG_D_M, LOG_D_m
from .errors import DomainError, UnsupportedRegionError
from .ratios import log_gamma_c_ratio, log_gamma_m
from .specfun import as_point, zeta_real


class VerdictKind(enum.Enum):
    NORTHCOTT_ALL_B = "NorthcottAllB"
    NON_NORTHCOTT_ALL_B = "NonNorthcottAllB"
    NON_NORTHCOTT_FOR_LARGE_B = "NonNorthcottForLargeB"
    CONDITIONAL_GRH_NON_NORTHCOTT = "ConditionalGRHNonNorthcott"
    UNKNOWN = "Unknown"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Verdict:
    """Outcome of ``classify``.

    ``margin`` is lhs - 1 for whichever inequality decided the point (positive
    for Northcott, negative for non-Northcott, and the Northcott lhs - 1 when
    nothing applies). Threshold verdicts carry their B in ``threshold`` and a
    margin of 0. The symbolic verdict at a negative integer has margin +inf.
    """

    kind: VerdictKind
    margin: float
    theorem_tag: str
    threshold: Optional[float] = None

    @property
    def decided(self) -> bool:
        return self.kind is not VerdictKind.UNKNOWN


def _require_negative(s: complex) -> None:
    if not s.real < 0.0:
        raise DomainError(f"condition needs Re s < 0, got {s!r}")


def log_northcott_lhs(s) -> float:
    """log(Gamma_m(s) D_m^{1/2-sigma} / zeta(1-sigma)); -inf at negative integers."""
    s = as_point(s)
    _require_negative(s)
    lg = log_gamma_m(s)
    if lg == -math.inf:
        return lg
    sigma = s.real
    return lg + (0.5 - sigma) * LOG_D_m - math.log(zeta_real(1.0 - sigma))


def northcott_condition(s) -> tuple[bool, float]:
    """Whether Northcott holds at s for every B, with the left-hand side."""
    lg = log_northcott_lhs(s)
    lhs = 0.0 if lg == -math.inf else math.exp(lg)
    return lhs > 1.0, lhs


def log_non_northcott_lhs(s) -> float:
    """log(gamma_c(s) zeta(1-sigma) D_M^{1/2-sigma})."""
    s = as_point(s)
    _require_negative(s)
    lg = log_gamma_c_ratio(s)
    if lg == -math.inf:
        return lg
    sigma = s.real
    return lg + math.log(zeta_real(1.0 - sigma)) + (0.5 - sigma) * LOG_D_M


def non_northcott_condition(s) -> tuple[bool, float]:
    """Whether Northcott fails at s for every B, with the left-hand side."""
    lg = log_non_northcott_lhs(s)
    lhs = 0.0 if lg == -math.inf else math.exp(lg)
    return lhs < 1.0, lhs


def sandwich_bounds(sigma: float, degree: int) -> tuple[float, float]:
    """(zeta(sigma)^-d, zeta(sigma)^d): envelope of |zeta_K(s)| over degree-d fields."""
    if not sigma > 1.0:
        raise DomainError(f"need sigma > 1, got {sigma!r}")
    if int(degree) != degree or degree < 1:
        raise DomainError(f"degree must be a positive integer, got {degree!r}")
    z = zeta_real(sigma)
    return z ** (-degree), z**degree


# -- classification ------------------------------------------------------------


def _northcott_tag(s: complex) -> str:
    sigma, tau = s.real, abs(s.imag)
    if sigma < radii.SIGMA0 and tau > radii.tau0():
        return "strip-tau0"
    c = round(sigma)
    if c <= -2 and abs(sigma - c) <= 0.5:
        try:
            rho = radii.closed_form_radius(c)
        except DomainError:
            rho = None
        if rho is not None and abs(s - c) > rho:
            return "closed-form-circle"
    if tau > radii.tau_threshold(sigma):
        return "effective-tau"
    return "northcott-criterion"


def _non_northcott_tag(s: complex) -> str:
    c = round(s.real)
    if c <= -1 and 0.0 < abs(s - c) < radii.non_northcott_radius(-c):
        return "non-northcott-radius"
    return "non-northcott-criterion"


def is_supported(sigma: float) -> bool:
    return sigma < 0.0 or 0.5 < sigma < 1.0 or sigma > 1.0


def classify(s) -> Verdict:
    """Strongest verdict available at s.

    Raises UnsupportedRegionError for 0 <= sigma <= 1/2 and sigma = 1.
    """
    s = as_point(s)
    sigma = s.real
    if not is_supported(sigma):
        raise UnsupportedRegionError(f"no result applies at sigma = {sigma!r}")

    if sigma > 1.0:
        z = zeta_real(sigma)
        return Verdict(VerdictKind.NON_NORTHCOTT_FOR_LARGE_B, 0.0, "sigma>1-sandwich", threshold=z * z)

    if sigma > 0.5:
        from .critstrip import b_threshold

        return Verdict(
            VerdictKind.CONDITIONAL_GRH_NON_NORTHCOTT,
            0.0,
            "critical-strip",
            threshold=b_threshold(s),
        )

    if s.imag == 0.0 and sigma == int(sigma):
        # Northcott at negative integers is known independently of both criteria.
        return Verdict(VerdictKind.NORTHCOTT_ALL_B, math.inf, "negative-integer")

    holds, lhs = northcott_condition(s)
    if holds:
        return Verdict(VerdictKind.NORTHCOTT_ALL_B, lhs - 1.0, _northcott_tag(s))
    fails, nn_lhs = non_northcott_condition(s)
    if fails:
        return Verdict(VerdictKind.NON_NORTHCOTT_ALL_B, nn_lhs - 1.0, _non_northcott_tag(s))
    return Verdict(VerdictKind.UNKNOWN, lhs - 1.0, "none")

"""Upper bound on the number of fields with |zeta_K(s)| <= B where Northcott holds."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .config import LOG_D_m
from .criteria import log_northcott_lhs
from .errors import ConditionViolatedError, DomainError
from .specfun import as_point

Q_CAVEAT = "Q is not known explicitly; the bound is only as meaningful as the value supplied"


def a_s(s) -> float:
    """log of the Northcott left-hand side; positive exactly where the condition holds."""
    lg = log_northcott_lhs(s)
    if not lg > 0.0:
        raise ConditionViolatedError(f"Northcott condition fails at {s!r} (log lhs = {lg})")
    return lg


@dataclass(frozen=True)
class CountBoundInput:
    s: complex
    B: float
    Q: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "s", as_point(self.s))
        if not self.B > 0.0:
            raise DomainError(f"B must be positive, got {self.B!r}")
        if not self.Q > 0.0:
            raise DomainError(f"Q must be positive, got {self.Q!r}")


@dataclass(frozen=True)
class CountBound:
    log_bound: float
    a_s: float
    degree_cutoff: float  # D = log B / a_s
    log_discriminant_cutoff: float  # log X = log B (1/(1/2 - sigma) + log D_m / a_s)

    @property
    def bound(self) -> float:
        """exp(log_bound), or inf when that overflows."""
        try:
            return math.exp(self.log_bound)
        except OverflowError:
            return math.inf


def count_bound(inp: CountBoundInput) -> CountBound:
    """exp(2Q (1/(1/2-sigma) + (1+log D_m)/a_s) log B (log(log B / a_s))^3), in log form."""
    a = a_s(inp.s)
    sigma = inp.s.real
    log_b = math.log(inp.B)
    ratio = log_b / a
    if not ratio > 1.0:
        raise DomainError(f"log B / a_s = {ratio} must exceed 1 for the bound to be defined")
    coeff = 1.0 / (0.5 - sigma) + (1.0 + LOG_D_m) / a
    log_bound = 2.0 * inp.Q * coeff * log_b * math.log(ratio) ** 3
    log_x = log_b * (1.0 / (0.5 - sigma) + LOG_D_m / a)
    return CountBound(log_bound=log_bound, a_s=a, degree_cutoff=ratio, log_discriminant_cutoff=log_x)

"""Numerical settings and the transcendental constants used everywhere."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, replace
from typing import Optional

EULER_GAMMA = 0.57721566490153286060651209008240243

# Root discriminant of a totally complex class field tower:
# (prime, exponent numerator, exponent denominator).
_D_M_FACTORS = (
    (3, 1, 8),
    (7, 1, 12),
    (13, 1, 12),
    (19, 1, 6),
    (23, 1, 3),
    (29, 1, 12),
    (31, 1, 12),
    (35509, 1, 6),
)


@dataclass(frozen=True)
class NumericsConfig:
    """Immutable numerical settings.

    ``working_precision`` is in decimal digits; anything above 16 switches the
    closed-form constants and radii to an mpmath backend at that precision.
    """

    working_precision: int = 16
    series_truncation: int = 64
    bisection_rel_tol: float = 1e-12
    quadrature_abs_tol: float = 1e-12
    delta: float = 0.0025

    def __post_init__(self):
        if self.working_precision < 15:
            raise ValueError("working_precision must be at least 15 digits")
        if self.series_truncation < 50:
            raise ValueError("series_truncation must be at least 50")
        if not 0.0 < self.bisection_rel_tol < 1.0:
            raise ValueError("bisection_rel_tol must lie in (0, 1)")
        if not self.quadrature_abs_tol > 0.0:
            raise ValueError("quadrature_abs_tol must be positive")
        if not self.delta > 0.0:
            raise ValueError("delta must be positive")

    @property
    def extended(self) -> bool:
        return self.working_precision > 16

    def with_overrides(self, **kwargs) -> "NumericsConfig":
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})

    @classmethod
    def from_env(cls) -> "NumericsConfig":
        """Default config, with ``NORTHCOTT_PRECISION`` overriding the precision."""
        raw = os.environ.get("NORTHCOTT_PRECISION")
        if raw is None or raw.strip() == "":
            return cls()
        return cls(working_precision=int(raw))


DEFAULT_CONFIG = NumericsConfig()


@dataclass(frozen=True)
class Constants:
    """Root-discriminant constants D_m, D_M and an optional tau_0 override.

    The default instance is exact. Other instances exist to reproduce numbers
    that were computed from rounded constants.
    """

    euler_gamma: float
    d_m: float
    d_M: float
    tau0: Optional[float] = None
    exact: bool = False

    @property
    def exp_gamma(self) -> float:
        return math.exp(self.euler_gamma)

    @property
    def root_ratio(self) -> float:
        """D_m / 2pi, which equals 2 e^gamma."""
        return self.d_m / (2.0 * math.pi)


def log_d_M() -> float:
    return sum(num * math.log(p) / den for p, num, den in _D_M_FACTORS)


def _make_constants() -> Constants:
    return Constants(
        euler_gamma=EULER_GAMMA,
        d_m=4.0 * math.pi * math.exp(EULER_GAMMA),
        d_M=math.exp(log_d_M()),
        exact=True,
    )


CONSTANTS = _make_constants()

# Four-significant-figure roundings D_m = 22.38, D_M = 78.43. With these the
# published radius table is reproduced to about twelve digits for the
# non-Northcott column and for the disc around -2.
PUBLISHED_TABLE_CONSTANTS = Constants(euler_gamma=EULER_GAMMA, d_m=22.38, d_M=78.43)

LOG_D_m = math.log(CONSTANTS.d_m)
LOG_D_M = log_d_M()

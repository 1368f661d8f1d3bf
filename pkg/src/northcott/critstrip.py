"""Unconditional non-Northcott threshold B(s) for 1/2 < Re s < 1.

    B(s) = |zeta(s)| (e^{1/2} A(s - 1/2, conj(s) - 1/2) 8 I / 9)^{1/2}

where I is the integral of a bump function on [1/2, 3] and A is an Euler
product over the odd primes.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.integrate import quad

from .config import DEFAULT_CONFIG, NumericsConfig
from .errors import ConvergenceError, DomainError, PoleError
from .specfun import as_point, zeta_complex

A_REL_TOL = 1e-8
MIN_PRIME = 1000
MAX_PRIME = 20_000_000


def phi(x: float) -> float:
    """exp(-1/((2x-1)(3-x))) on (1/2, 3), zero elsewhere."""
    if not 0.5 < x < 3.0:
        return 0.0
    return math.exp(-1.0 / ((2.0 * x - 1.0) * (3.0 - x)))


@lru_cache(maxsize=8)
def _i_integral(abs_tol: float) -> float:
    value, err = quad(phi, 0.5, 3.0, epsabs=abs_tol, epsrel=0.0, limit=200)
    if err > abs_tol:
        raise ConvergenceError(f"quadrature error estimate {err} exceeds {abs_tol}")
    return value


def i_integral(config: NumericsConfig = DEFAULT_CONFIG) -> float:
    """Integral of ``phi`` over its support."""
    return _i_integral(config.quadrature_abs_tol)


# -- Euler product -------------------------------------------------------------


def euler_factor(p: int, alpha1: complex, alpha2: complex) -> complex:
    """[((1-u)^-1 (1-v)^-1 + (1+u)^-1 (1+v)^-1)/2 + 1/p] (1 + 1/p)^-1."""
    u = cmath.exp(-(0.5 + alpha1) * math.log(p))
    v = cmath.exp(-(0.5 + alpha2) * math.log(p))
    w = 1.0 / p
    even = 0.5 * (1.0 / ((1.0 - u) * (1.0 - v)) + 1.0 / ((1.0 + u) * (1.0 + v)))
    return (even + w) / (1.0 + w)


def odd_primes_upto(n: int) -> np.ndarray:
    if n < 3:
        return np.zeros(0, dtype=np.int64)
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    sieve[4::2] = False
    for k in range(3, math.isqrt(n) + 1, 2):
        if sieve[k]:
            sieve[k * k :: 2 * k] = False
    primes = np.nonzero(sieve)[0]
    return primes[1:]  # drop 2


def truncated_product(alpha1: complex, alpha2: complex, prime_limit: int) -> complex:
    """Plain product of ``euler_factor`` over odd primes up to prime_limit."""
    p = odd_primes_upto(prime_limit).astype(float)
    logp = np.log(p)
    u = np.exp(-(0.5 + complex(alpha1)) * logp)
    v = np.exp(-(0.5 + complex(alpha2)) * logp)
    w = 1.0 / p
    f = (0.5 * (1.0 / ((1.0 - u) * (1.0 - v)) + 1.0 / ((1.0 + u) * (1.0 + v))) + w) / (1.0 + w)
    logs = np.log(f)
    return cmath.exp(complex(math.fsum(logs.real), math.fsum(logs.imag)))


def tail_bound(a: float, prime_limit: int) -> float:
    """Bound on |log A - log A_P| after removing the zeta factors.

    With q = p^{-1/2-a} each remaining factor g satisfies
    |g - 1| <= q^4 + (3 q^2 + 3 q^4 + q^6) / p, and |log g| <= 2 |g - 1|.
    Each power is summed over all integers above P by the integral test.
    """
    P = float(prime_limit)
    s = (
        P ** (-1 - 4 * a) / (1 + 4 * a)
        + 3 * P ** (-1 - 2 * a) / (1 + 2 * a)
        + 3 * P ** (-2 - 4 * a) / (2 + 4 * a)
        + P ** (-3 - 6 * a) / (3 + 6 * a)
    )
    return 2.0 * s


def _pick_prime_limit(a: float, rel_tol: float, max_prime: int) -> int:
    P = MIN_PRIME
    while P < max_prime and math.expm1(tail_bound(a, P)) > rel_tol:
        P *= 2
    return min(P, max_prime)


def _odd_zeta(s: complex) -> complex:
    """zeta(s) with the factor at 2 removed."""
    if s == 1.0:
        raise PoleError("zeta pole inside the moment constant")
    return zeta_complex(s) * (1.0 - cmath.exp(-s * math.log(2.0)))


@dataclass(frozen=True)
class MomentConstant:
    alpha1: complex
    alpha2: complex
    value: complex
    truncation_prime: int
    rel_error_bound: float

    def __post_init__(self):
        if not (abs(self.alpha1.real) < 0.5 and abs(self.alpha2.real) < 0.5):
            raise ValueError("real parts must lie in (-1/2, 1/2)")


def moment_constant(
    alpha1,
    alpha2,
    rel_tol: float = A_REL_TOL,
    max_prime: int = MAX_PRIME,
    strict: bool = False,
) -> MomentConstant:
    """Euler product A over the odd primes, accelerated by zeta factors.

    Each factor is split as
        zeta_p(1 + a1 + a2) zeta_p(1 + 2 a1) zeta_p(1 + 2 a2) g(p),
    the zeta parts are taken in closed form and only g is multiplied out.
    ``rel_error_bound`` is the proven relative truncation error; with
    ``strict`` a bound above ``rel_tol`` raises ConvergenceError.
    """
    a1, a2 = as_point(alpha1), as_point(alpha2)
    if not (abs(a1.real) < 0.5 and abs(a2.real) < 0.5):
        raise DomainError(f"need |Re alpha| < 1/2, got {a1!r}, {a2!r}")
    a = min(a1.real, a2.real)
    if not a > 0.0:
        raise ConvergenceError(f"the product diverges for min Re alpha = {a} <= 0")

    P = _pick_prime_limit(a, rel_tol, max_prime)
    bound = math.expm1(tail_bound(a, P))
    if strict and bound > rel_tol:
        raise ConvergenceError(f"tail bound {bound:.3g} exceeds {rel_tol:.3g} at P = {P}")

    p = odd_primes_upto(P).astype(float)
    logp = np.log(p)
    u = np.exp(-(0.5 + a1) * logp)
    v = np.exp(-(0.5 + a2) * logp)
    w = 1.0 / p
    uv = u * v
    g_minus_1 = (-uv * uv + w * ((1.0 - uv) * (1.0 - u * u) * (1.0 - v * v) - 1.0)) / (1.0 + w)
    logs = np.log1p(g_minus_1)
    log_g = complex(math.fsum(logs.real), math.fsum(logs.imag))

    zetas = _odd_zeta(1.0 + a1 + a2) * _odd_zeta(1.0 + 2.0 * a1) * _odd_zeta(1.0 + 2.0 * a2)
    value = zetas * cmath.exp(log_g)
    if a2 == a1.conjugate():
        value = complex(value.real, 0.0)
    return MomentConstant(a1, a2, value, P, bound)


# -- threshold -----------------------------------------------------------------


@dataclass(frozen=True)
class BThreshold:
    s: complex
    value: float
    zeta_abs: float
    moment: MomentConstant
    i_value: float

    @property
    def rel_error_bound(self) -> float:
        # B scales like A^{1/2}
        return 0.5 * self.moment.rel_error_bound


def b_threshold_report(s, config: NumericsConfig = DEFAULT_CONFIG, rel_tol: float = A_REL_TOL) -> BThreshold:
    s = as_point(s)
    if not 0.5 < s.real < 1.0:
        raise DomainError(f"need 1/2 < Re s < 1, got {s!r}")
    alpha = s - 0.5
    moment = moment_constant(alpha, alpha.conjugate(), rel_tol=rel_tol)
    i_value = i_integral(config)
    z = abs(zeta_complex(s))
    value = z * math.sqrt(math.exp(0.5) * moment.value.real * 8.0 * i_value / 9.0)
    return BThreshold(s, value, z, moment, i_value)


def b_threshold(s, config: NumericsConfig = DEFAULT_CONFIG) -> float:
    """Bound above which Northcott fails at s for every B."""
    return b_threshold_report(s, config).value

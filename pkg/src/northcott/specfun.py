"""Gamma, digamma and Riemann zeta in double precision.

Everything here is written against plain ``math``/``cmath`` so that the rest
of the package has one self-contained source of special-function values.
Complex arguments are ordinary Python ``complex`` numbers.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from numbers import Number

from .config import EULER_GAMMA
from .errors import DomainError, PoleError

POLE_GUARD = 1e-300

_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)
_SQRT_2PI = math.sqrt(2.0 * math.pi)

# Lanczos approximation, g = 7, n = 9 (Godfrey's coefficients).
_LANCZOS_G = 7.0
_LANCZOS_P = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

# B_2, B_4, ..., B_18
_BERNOULLI = (
    Fraction(1, 6),
    Fraction(-1, 30),
    Fraction(1, 42),
    Fraction(-1, 30),
    Fraction(5, 66),
    Fraction(-691, 2730),
    Fraction(7, 6),
    Fraction(-3617, 510),
    Fraction(43867, 798),
)
# B_{2k} / (2k)!
_EM_COEFFS = tuple(float(b / math.factorial(2 * k + 2)) for k, b in enumerate(_BERNOULLI))
# B_{2k} / (2k)
_DIGAMMA_COEFFS = tuple(float(b / (2 * k + 2)) for k, b in enumerate(_BERNOULLI))

EM_TERMS = 8


def as_point(z) -> complex:
    """Coerce to ``complex`` and reject NaN/infinity."""
    if not isinstance(z, Number):
        raise TypeError(f"expected a number, got {type(z).__name__}")
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"non-finite point {z!r}")
    return z


def _check_pole(z: complex) -> None:
    if z.real <= 0.5:
        n = round(z.real)
        if n <= 0 and abs(z - n) <= POLE_GUARD:
            raise PoleError(f"gamma has a pole at {n}")


# -- trigonometric helpers with exact argument reduction ---------------------


def _reduce(x: float) -> tuple[int, float]:
    n = round(x)
    return n, x - n  # exact by Sterbenz for |x - n| <= 1/2


def sin_pi(z) -> complex:
    """sin(pi z), reducing the real part exactly before multiplying by pi."""
    z = complex(z)
    n, d = _reduce(z.real)
    v = cmath.sin(math.pi * complex(d, z.imag))
    return -v if n % 2 else v


def log_abs_sin_pi(z) -> float:
    """log|sin(pi z)| without overflow for large imaginary parts."""
    z = complex(z)
    _, d = _reduce(z.real)
    y = math.pi * abs(z.imag)
    x = math.pi * d
    if y > 20.0:
        e2 = math.exp(-2.0 * y)
        return y - math.log(2.0) + 0.5 * math.log1p(e2 * e2 - 2.0 * math.cos(2.0 * x) * e2)
    m = math.hypot(math.sin(x), math.sinh(y))  # no squaring, so no underflow
    if m == 0.0:
        return -math.inf
    return math.log(m)


def cot_pi(z) -> complex:
    z = complex(z)
    if z.imag < 0:
        return cot_pi(z.conjugate()).conjugate()
    _, d = _reduce(z.real)
    if z.imag < 1.0:
        w = math.pi * complex(d, z.imag)
        return cmath.cos(w) / cmath.sin(w)
    q = cmath.exp(2j * math.pi * complex(d, z.imag))
    return 1j * (q + 1.0) / (q - 1.0)


# -- gamma ---------------------------------------------------------------------


def _lanczos_sum(z):
    x = _LANCZOS_P[0]
    for i in range(1, len(_LANCZOS_P)):
        x += _LANCZOS_P[i] / (z + i)
    return x


def _gamma_right(z: complex) -> complex:
    # Re z >= 1/2
    zm = z - 1.0
    t = zm + _LANCZOS_G + 0.5
    return _SQRT_2PI * cmath.exp((zm + 0.5) * cmath.log(t) - t) * _lanczos_sum(zm)


def gamma(z) -> complex:
    """Complex gamma function.

    Uses the Lanczos approximation for Re z >= 1/2 and the reflection formula
    Gamma(z) Gamma(1-z) = pi / sin(pi z) to the left of that line.
    """
    z = as_point(z)
    _check_pole(z)
    if z.real < 0.5:
        return math.pi / (sin_pi(z) * _gamma_right(1.0 - z))
    return _gamma_right(z)


def _gamma_real_right(x: float) -> float:
    xm = x - 1.0
    t = xm + _LANCZOS_G + 0.5
    return _SQRT_2PI * math.exp((xm + 0.5) * math.log(t) - t) * _lanczos_sum(xm)


def gamma_real(x: float) -> float:
    """Real gamma function through the same Lanczos/reflection route."""
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"non-finite argument {x!r}")
    if x < 0.5:
        n = round(x)
        if n <= 0 and abs(x - n) <= POLE_GUARD:
            raise PoleError(f"gamma has a pole at {n}")
        return math.pi / (sin_pi(x).real * _gamma_real_right(1.0 - x))
    return _gamma_real_right(x)


def _log_abs_gamma_right(z: complex) -> float:
    zm = z - 1.0
    t = zm + _LANCZOS_G + 0.5
    main = (zm + 0.5) * cmath.log(t) - t
    return _LOG_SQRT_2PI + main.real + math.log(abs(_lanczos_sum(zm)))


def log_abs_gamma(z) -> float:
    """log|Gamma(z)|, safe where Gamma itself would overflow or underflow."""
    z = as_point(z)
    _check_pole(z)
    if z.real < 0.5:
        return math.log(math.pi) - log_abs_sin_pi(z) - _log_abs_gamma_right(1.0 - z)
    return _log_abs_gamma_right(z)


# -- digamma -------------------------------------------------------------------


def digamma(z) -> complex:
    """psi(z) = Gamma'(z)/Gamma(z).

    Left half-plane by reflection, then the recurrence psi(z) = psi(z+1) - 1/z
    to push |z| past 12, then the asymptotic tail of the series.
    """
    z = as_point(z)
    _check_pole(z)
    if z.real < 0.5:
        return digamma(1.0 - z) - math.pi * cot_pi(z)
    acc = 0j
    while abs(z) < 12.0:
        acc -= 1.0 / z
        z += 1.0
    inv2 = 1.0 / (z * z)
    series = 0j
    p = inv2
    for c in _DIGAMMA_COEFFS[:EM_TERMS]:
        series += c * p
        p *= inv2
    return acc + cmath.log(z) - 0.5 / z - series


# -- Riemann zeta --------------------------------------------------------------


def _em_tail_terms(s, n: int, power):
    """Bernoulli correction terms of Euler-Maclaurin at cutoff n.

    Returns (sum of the first EM_TERMS terms, bound on the remainder).
    """
    total = 0.0
    rising = s  # s (s+1) ... (s+2k-2)
    npow = power(n, -s - 1.0)
    inv_n2 = 1.0 / (n * n)
    for k in range(EM_TERMS):
        total += _EM_COEFFS[k] * rising * npow
        rising *= (s + 2 * k + 1) * (s + 2 * k + 2)
        npow *= inv_n2
    # first omitted term times |s + 2m + 1| / (sigma + 2m + 1)
    sigma = s.real if isinstance(s, complex) else s
    nxt = abs(_EM_COEFFS[EM_TERMS] * rising * npow)
    bound = nxt * abs(s + 2 * EM_TERMS + 1) / (sigma + 2 * EM_TERMS + 1)
    return total, bound


def _pick_cutoff(s, power, tol: float = 1e-14) -> int:
    n = max(10, int(abs(s) / 2) + 1)
    while True:
        _, bound = _em_tail_terms(s, n, power)
        if bound < tol:
            return n
        n = int(n * 1.5) + 1


def _rpow(n, e):
    return math.exp(e * math.log(n))


def _cpow(n, e):
    return cmath.exp(e * math.log(n))


def zeta_real(x: float) -> float:
    """Riemann zeta for real x > 1 via Euler-Maclaurin summation."""
    x = float(x)
    if not (math.isfinite(x) and x > 1.0):
        raise DomainError(f"zeta_real needs x > 1, got {x!r}")
    if x > 60.0:
        # 2^-x and 3^-x are all that survive in double precision.
        return 1.0 + 2.0 ** -x + 3.0 ** -x
    n = _pick_cutoff(x, _rpow)
    head = math.fsum(k ** -x for k in range(1, n))
    corr, _ = _em_tail_terms(x, n, _rpow)
    return head + n ** (1.0 - x) / (x - 1.0) + 0.5 * n ** -x + corr


def zeta_complex(s) -> complex:
    """Analytic continuation of zeta(s) for Re s > 0, s != 1."""
    s = as_point(s)
    if s.real <= 0.0:
        raise DomainError(f"zeta_complex needs Re s > 0, got {s!r}")
    if s == 1.0:
        raise PoleError("zeta has a pole at s = 1")
    if s.imag == 0.0 and s.real > 1.0:
        return complex(zeta_real(s.real), 0.0)
    n = _pick_cutoff(s, _cpow)
    head = 0j
    for k in range(1, n):
        head += cmath.exp(-s * math.log(k))
    corr, _ = _em_tail_terms(s, n, _cpow)
    ns = cmath.exp(-s * math.log(n))
    return head + n * ns / (s - 1.0) + 0.5 * ns + corr


# -- modulus sandwiches ------------------------------------------------------


def sin_abs_bounds(z) -> tuple[float, float, float]:
    """(|sin |z||, |sin z|, sinh |z|), checked to be ordered."""
    z = as_point(z)
    r = abs(z)
    lower, value, upper = abs(math.sin(r)), abs(cmath.sin(z)), math.sinh(r)
    slack = 1e-12 * max(1.0, value)
    assert lower <= value + slack and value <= upper + slack, (lower, value, upper)
    return lower, value, upper


def cos_abs_bounds(z) -> tuple[float, float, float]:
    """(|cos |z||, |cos z|, cosh |z|), checked to be ordered."""
    z = as_point(z)
    r = abs(z)
    lower, value, upper = abs(math.cos(r)), abs(cmath.cos(z)), math.cosh(r)
    slack = 1e-12 * max(1.0, value)
    assert lower <= value + slack and value <= upper + slack, (lower, value, upper)
    return lower, value, upper


__all__ = [
    "EULER_GAMMA",
    "as_point",
    "cos_abs_bounds",
    "cot_pi",
    "digamma",
    "gamma",
    "gamma_real",
    "log_abs_gamma",
    "log_abs_sin_pi",
    "sin_abs_bounds",
    "sin_pi",
    "zeta_complex",
    "zeta_real",
]

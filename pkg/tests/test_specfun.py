import cmath
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from northcott import specfun as sf
from northcott.errors import DomainError, PoleError


def rel(a, b):
    return abs(a - b) / abs(b)


def _grid(n, lo_re, hi_re, lo_im, hi_im, seed):
    rng = random.Random(seed)
    pts = []
    while len(pts) < n:
        z = complex(rng.uniform(lo_re, hi_re), rng.uniform(lo_im, hi_im))
        if min(abs(z - k) for k in range(-30, 1)) > 0.05:
            pts.append(z)
    return pts


GAMMA_GRID = _grid(100, -8.0, 12.0, -15.0, 15.0, seed=1)


# -- examples ------------------------------------------------------------------


def test_gamma_integers_and_half():
    assert sf.gamma(5) == pytest.approx(24.0, rel=1e-13)
    assert sf.gamma(0.5).real == pytest.approx(math.sqrt(math.pi), rel=1e-13)
    assert abs(sf.gamma(0.5).imag) < 1e-15


def test_gamma_complex_point_against_product():
    z = 0.5 + 1j
    assert rel(sf.gamma(z), oracles.gamma_product(z, n=10**7)) < 1e-9


def test_log_abs_gamma_examples():
    assert sf.log_abs_gamma(5) == pytest.approx(math.log(24.0), rel=1e-13)
    assert abs(sf.log_abs_gamma(1)) < 1e-14
    z = 2 + 50j
    assert abs(sf.log_abs_gamma(z) - oracles.log_abs_gamma_product(z)) < 1e-9 * abs(sf.log_abs_gamma(z))


def test_digamma_examples():
    assert sf.digamma(1).real == pytest.approx(-sf.EULER_GAMMA, rel=1e-14)
    assert sf.digamma(2).real == pytest.approx(1 - sf.EULER_GAMMA, rel=1e-14)
    z = 1.6 + 1.1j
    assert rel(sf.digamma(z), oracles.digamma_series(z)) < 1e-10


def test_zeta_real_examples():
    assert sf.zeta_real(2) == pytest.approx(math.pi**2 / 6, rel=1e-14)
    assert rel(sf.zeta_real(2.5), oracles.zeta_dirichlet(2.5)) < 1e-12
    assert 0 < sf.zeta_real(10) - 1 < 1e-3
    xs = [1.5, 2, 3, 5, 10, 20, 40, 80]
    values = [sf.zeta_real(x) for x in xs]
    assert all(a > b for a, b in zip(values, values[1:]))
    assert all(v >= 1 for v in values)  # zeta(80) rounds to 1.0


def test_zeta_complex_examples():
    assert sf.zeta_complex(2).real == pytest.approx(math.pi**2 / 6, rel=1e-14)
    assert rel(sf.zeta_complex(0.75), oracles.zeta_eta(0.75)) < 1e-10
    for s in (0.3 + 4j, 0.9 - 20j, 2.5 + 44j):
        assert abs(sf.zeta_complex(s.conjugate()) - sf.zeta_complex(s).conjugate()) < 1e-14 * abs(sf.zeta_complex(s))


def test_sin_bounds_examples():
    lo, val, hi = sf.sin_abs_bounds(1)
    # the lower bound and the value coincide on the real axis; sinh 1 does not
    assert lo == pytest.approx(abs(math.sin(1)))
    assert val == pytest.approx(abs(math.sin(1)))
    assert hi == pytest.approx(math.sinh(1))
    assert sf.sin_abs_bounds(0) == (0.0, 0.0, 0.0)
    lo, val, hi = sf.sin_abs_bounds(0.3 + 0.4j)
    assert lo == pytest.approx(math.sin(0.5)) and hi == pytest.approx(math.sinh(0.5))
    assert lo <= val <= hi


# -- errors --------------------------------------------------------------------


@pytest.mark.parametrize("z", [0, -1, -7, complex(-3, 0)])
def test_gamma_poles(z):
    with pytest.raises(PoleError):
        sf.gamma(z)
    with pytest.raises(PoleError):
        sf.log_abs_gamma(z)
    with pytest.raises(PoleError):
        sf.digamma(z)


def test_zeta_domain_errors():
    with pytest.raises(DomainError):
        sf.zeta_real(1.0)
    with pytest.raises(DomainError):
        sf.zeta_complex(-0.5 + 1j)
    with pytest.raises(PoleError):
        sf.zeta_complex(1)


def test_non_finite_rejected():
    with pytest.raises(DomainError):
        sf.gamma(complex(math.nan, 0))
    with pytest.raises(DomainError):
        sf.zeta_complex(complex(2, math.inf))


# -- oracle grids ----------------------------------------------------------------


def test_gamma_matches_product_on_grid():
    worst = max(rel(sf.gamma(z), oracles.gamma_product(z)) for z in GAMMA_GRID)
    assert worst < 1e-9


def test_log_abs_gamma_matches_product_on_grid():
    pts = _grid(100, -8.0, 30.0, -50.0, 50.0, seed=2)
    worst = max(abs(sf.log_abs_gamma(z) - oracles.log_abs_gamma_product(z)) / max(1.0, abs(sf.log_abs_gamma(z))) for z in pts)
    assert worst < 1e-9


def test_digamma_matches_series_on_grid():
    pts = _grid(100, -8.0, 20.0, -20.0, 20.0, seed=3)
    worst = max(rel(sf.digamma(z), oracles.digamma_series(z)) for z in pts)
    assert worst < 1e-9


def test_zeta_real_matches_dirichlet_on_grid():
    xs = [1.05 + 0.1 * k for k in range(100)]
    worst = max(rel(sf.zeta_real(x), oracles.zeta_dirichlet(x)) for x in xs)
    assert worst < 1e-9


def test_zeta_complex_matches_eta_on_grid():
    rng = random.Random(4)
    pts = [complex(rng.uniform(0.05, 3.0), rng.uniform(-50.0, 50.0)) for _ in range(100)]
    worst = max(rel(sf.zeta_complex(s), oracles.zeta_eta(s, n=2 * 10**5)) for s in pts)
    assert worst < 1e-9


# -- identities on random samples ---------------------------------------------------


def _random_points(n, radius, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        z = complex(rng.uniform(-radius, radius), rng.uniform(-radius, radius))
        if abs(z) <= radius and abs(z.real - round(z.real)) > 1e-3:
            out.append(z)
    return out


def test_reflection_identity():
    worst = 0.0
    for z in _random_points(10**4, 20.0, seed=5):
        v = sf.gamma(z) * sf.gamma(1 - z) * sf.sin_pi(z) / math.pi
        worst = max(worst, abs(v - 1))
    assert worst < 1e-10


def test_duplication_identity():
    worst = 0.0
    for z in _random_points(10**4, 20.0, seed=6):
        if abs(2 * z.real - round(2 * z.real)) < 1e-3:
            continue
        lhs = sf.gamma(z) * sf.gamma(z + 0.5)
        rhs = 2 ** (1 - 2 * z) * math.sqrt(math.pi) * sf.gamma(2 * z)
        worst = max(worst, abs(lhs / rhs - 1))
    assert worst < 1e-10


def test_sandwich_bounds_on_random_points():
    rng = random.Random(7)
    for _ in range(10**5):
        r = 30.0 * math.sqrt(rng.random())
        z = cmath.rect(r, rng.uniform(-math.pi, math.pi))
        for lo, val, hi in (sf.sin_abs_bounds(z), sf.cos_abs_bounds(z)):
            assert lo <= val * (1 + 1e-12) + 1e-300
            assert val <= hi * (1 + 1e-12)


@settings(max_examples=300, deadline=None)
@given(st.floats(0.05, 20.0), st.floats(-30.0, 30.0))
def test_modulus_never_exceeds_real_gamma(sigma, tau):
    assert abs(sf.gamma(complex(sigma, tau))) <= sf.gamma_real(sigma) * (1 + 1e-12)


@settings(max_examples=300, deadline=None)
@given(st.floats(0.5, 20.0), st.floats(-30.0, 30.0))
def test_modulus_lower_bound_right_of_half(sigma, tau):
    lower = sf.log_abs_gamma(sigma) - 0.5 * math.log(math.cosh(math.pi * tau))
    assert sf.log_abs_gamma(complex(sigma, tau)) >= lower - 1e-12 * max(1.0, abs(lower))


@settings(max_examples=300, deadline=None)
@given(st.floats(1.0001, 20.0), st.floats(-30.0, 30.0).filter(lambda t: abs(t) > 1e-6))
def test_lower_bound_right_of_one(sigma, tau):
    # |Gamma(sigma + i tau)|^2 >= Gamma(sigma)^2 |pi tau / sin(pi i tau)|
    lhs = 2 * sf.log_abs_gamma(complex(sigma, tau))
    x = math.pi * abs(tau)
    log_ratio = math.log(x) - (x + math.log1p(-math.exp(-2 * x)) - math.log(2.0))
    rhs = 2 * sf.log_abs_gamma(sigma) + log_ratio
    assert lhs >= rhs - 1e-10 * max(1.0, abs(rhs))


@settings(max_examples=200, deadline=None)
@given(st.floats(-25.0, 25.0), st.floats(-25.0, 25.0))
def test_log_abs_gamma_consistent_with_gamma(x, y):
    z = complex(x, y)
    if abs(z.real - round(z.real)) < 1e-6 and abs(y) < 1e-6:
        return
    g = abs(sf.gamma(z))
    if 1e-300 < g < 1e300:
        assert math.exp(sf.log_abs_gamma(z)) == pytest.approx(g, rel=1e-11)


@settings(max_examples=200, deadline=None)
@given(st.floats(1.001, 80.0))
def test_zeta_real_and_complex_agree_on_axis(x):
    assert sf.zeta_complex(x).real == pytest.approx(sf.zeta_real(x), rel=1e-14)


@settings(max_examples=200, deadline=None)
@given(st.floats(-40.0, 40.0), st.floats(-40.0, 40.0))
def test_digamma_recurrence(x, y):
    z = complex(x, y)
    if abs(z) < 0.5 or min(abs(z - k) for k in range(-41, 1)) < 1e-3:
        return
    lhs = sf.digamma(z + 1)
    rhs = sf.digamma(z) + 1 / z
    assert abs(lhs - rhs) <= 1e-11 * max(1.0, abs(lhs))

import math
import random

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from northcott import ratios
from northcott.errors import DomainError
from northcott.radii import tau0
from northcott.specfun import gamma_real

mpmath.mp.dps = 30
TAU0 = tau0()


def direct_real(s):
    """|Gamma_R(1-s) / Gamma_R(s)| straight from the definition."""
    s = mpmath.mpc(s)
    g = lambda z: mpmath.pi ** (-z / 2) * mpmath.gamma(z / 2)
    return float(abs(g(1 - s) / g(s)))


def direct_complex(s):
    s = mpmath.mpc(s)
    g = lambda z: 2 * (2 * mpmath.pi) ** (-z) * mpmath.gamma(z)
    return float(mpmath.sqrt(abs(g(1 - s) / g(s))))


def base(sigma):
    return (2 * math.pi) ** (sigma - 0.5) / math.sqrt(math.pi) * gamma_real(1 - sigma)


# -- examples ------------------------------------------------------------------


@pytest.mark.parametrize("s", [-1, -2, -3, 0])
def test_complex_ratio_vanishes_at_integers(s):
    assert ratios.gamma_c_ratio(s) == 0.0
    assert ratios.log_gamma_c_ratio(s) == -math.inf


@pytest.mark.parametrize("s", [0, -2, -4, -10])
def test_real_ratio_vanishes_at_even_integers(s):
    assert ratios.gamma_r_ratio(s) == 0.0


def test_real_ratio_at_minus_one():
    # pi^{-3/2} Gamma(1) Gamma(3/2) |sin(-pi/2)| / pi = 1/(2 pi^2)
    assert ratios.gamma_r_ratio(-1) == pytest.approx(1 / (2 * math.pi**2), rel=1e-14)
    assert ratios.gamma_r_ratio(-1) == pytest.approx(direct_real(-1), rel=1e-12)


@pytest.mark.parametrize("n", [1, 3, 5, 7])
def test_real_ratio_positive_at_odd_integers(n):
    assert ratios.gamma_r_ratio(-n) > 0.0


def test_complex_ratio_against_direct_quotient():
    assert ratios.gamma_c_ratio(-2.5) == pytest.approx(direct_complex(-2.5), rel=1e-10)


def test_real_ratio_against_direct_quotient():
    s = -0.75 + 0.2j
    assert ratios.gamma_r_ratio(s) == pytest.approx(direct_real(s), rel=1e-10)


def test_gamma_m_examples():
    assert ratios.gamma_m(-2).gamma_m == 0.0
    m = ratios.gamma_m(-1)
    assert m.gamma_c == 0.0 and m.gamma_m == 0.0 and m.gamma_r > 0.0
    s = -1.5 + 0.5j
    m = ratios.gamma_m(s)
    assert m.gamma_r == pytest.approx(direct_real(s), rel=1e-10)
    assert m.gamma_c == pytest.approx(direct_complex(s), rel=1e-10)
    assert m.gamma_m == min(m.gamma_r, m.gamma_c)


@pytest.mark.parametrize("s", [1, 1.5, 2 + 3j])
def test_domain(s):
    with pytest.raises(DomainError):
        ratios.gamma_c_ratio(s)
    with pytest.raises(DomainError):
        ratios.gamma_r_ratio(s)


def test_large_imaginary_part_stays_finite():
    for s in (-3 + 50j, -0.2 - 50j, 0.4 + 50j):
        assert math.isfinite(ratios.log_gamma_c_ratio(s))
        assert math.isfinite(ratios.log_gamma_r_ratio(s))
        assert ratios.gamma_c_ratio(s) == pytest.approx(direct_complex(s), rel=1e-9)


# -- direct quotient on a grid -----------------------------------------------------


def test_ratios_match_direct_quotient_on_grid():
    rng = random.Random(11)
    worst = 0.0
    for _ in range(200):
        s = complex(rng.uniform(-8.0, 0.9), rng.uniform(-20.0, 20.0))
        if abs(s.imag) < 1e-3:
            continue
        worst = max(worst, abs(ratios.gamma_r_ratio(s) / direct_real(s) - 1))
        worst = max(worst, abs(ratios.gamma_c_ratio(s) / direct_complex(s) - 1))
    assert worst < 1e-10


# -- lower bounds ----------------------------------------------------------------


def _sample_left_half(n, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        s = complex(rng.uniform(-10.0, -1e-3), rng.uniform(-10.0, 10.0))
        if abs(s.imag) > 1e-6:
            out.append(s)
    return out


LEFT_SAMPLE = _sample_left_half(10**4, seed=12)


def test_tanh_lower_bounds():
    for s in LEFT_SAMPLE:
        sigma, tau = s.real, s.imag
        b = base(sigma)
        assert ratios.gamma_c_ratio(s) >= b * math.tanh(math.pi * abs(tau)) ** 0.5 * (1 - 1e-10)
        assert ratios.gamma_r_ratio(s) >= math.sqrt(2) * b * abs(math.tanh(math.pi * tau / 2)) * (1 - 1e-10)


def test_linear_in_tau_lower_bounds():
    for s in LEFT_SAMPLE:
        sigma, tau = s.real, s.imag
        c = (2 * math.pi) ** (2 * sigma - 1) * gamma_real(1 - sigma) ** 2 * abs(tau)
        assert ratios.gamma_c_ratio(s) ** 2 >= c * (1 - 1e-10)
        assert ratios.gamma_r_ratio(s) ** 2 >= c * abs(math.tanh(math.pi * tau / 2)) * (1 - 1e-10)


def _rectangle(center, n, seed):
    rng = random.Random(seed)
    return [complex(center + rng.uniform(-0.5, 0.5), rng.uniform(-TAU0, TAU0)) for _ in range(n)]


@pytest.mark.parametrize("k", [1, 2, 3])
def test_rectangle_bounds_near_even_integers(k):
    center = -2 * k
    ch, ch_half = math.cosh(math.pi * TAU0), math.cosh(math.pi * TAU0 / 2)
    for s in _rectangle(center, 2000, seed=k):
        r = abs(s - center)
        b = base(s.real)
        assert ratios.gamma_c_ratio(s) >= b * abs(math.sin(math.pi * r) / ch) ** 0.5 * (1 - 1e-10)
        assert ratios.gamma_r_ratio(s) >= math.sqrt(2) * b * abs(math.sin(math.pi * r / 2)) / ch_half * (1 - 1e-10)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_rectangle_bounds_near_odd_integers(k):
    center = -2 * k + 1
    ch, ch_half = math.cosh(math.pi * TAU0), math.cosh(math.pi * TAU0 / 2)
    floor = math.cos(math.pi / 2 * math.sqrt(0.25 + TAU0**2))
    for s in _rectangle(center, 2000, seed=10 + k):
        r = abs(s - center)
        b = base(s.real)
        assert ratios.gamma_c_ratio(s) >= b * abs(math.sin(math.pi * r) / ch) ** 0.5 * (1 - 1e-10)
        assert ratios.gamma_r_ratio(s) >= math.sqrt(2) * b * floor / ch_half * (1 - 1e-10)


# -- symmetry and branch choice ------------------------------------------------------


@settings(max_examples=300, deadline=None)
@given(st.floats(-15.0, 0.95), st.floats(-30.0, 30.0))
def test_conjugation_symmetry(sigma, tau):
    s = complex(sigma, tau)
    a, b = ratios.gamma_m(s), ratios.gamma_m(s.conjugate())
    assert a.gamma_r == pytest.approx(b.gamma_r, rel=1e-13, abs=0.0)
    assert a.gamma_c == pytest.approx(b.gamma_c, rel=1e-13, abs=0.0)
    assert a.gamma_m == pytest.approx(b.gamma_m, rel=1e-13, abs=0.0)


@settings(max_examples=300, deadline=None)
@given(st.floats(-12.0, 0.95), st.floats(-20.0, 20.0))
def test_ratio_quotient_is_root_tan(sigma, tau):
    s = complex(sigma, tau)
    lr, lc = ratios.log_gamma_r_ratio(s), ratios.log_gamma_c_ratio(s)
    if not (math.isfinite(lr) and math.isfinite(lc)):
        return
    h = mpmath.mpc(s) / 2  # exact halving; sinpi/cospi reduce the argument exactly
    expected = 0.5 * float(mpmath.log(abs(mpmath.sinpi(h) / mpmath.cospi(h))))
    assert lr - lc == pytest.approx(expected, abs=1e-9)


@settings(max_examples=300, deadline=None)
@given(st.floats(-12.0, 0.95), st.floats(-20.0, 20.0))
def test_branch_predicate_matches_minimum(sigma, tau):
    s = complex(sigma, tau)
    m = ratios.gamma_m(s)
    if m.gamma_c == 0.0 or abs(m.gamma_r / m.gamma_c - 1) < 1e-9:
        return
    assert ratios.real_ratio_is_smaller(sigma) == (m.gamma_r < m.gamma_c)

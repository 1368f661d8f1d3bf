"""Certified tracing of the Northcott boundary for -1.5 <= sigma < 0.

The interval is cut into short segments [alpha, beta]. On each one a single
inequality, evaluated at the segment endpoints, certifies the Northcott
condition for every sigma in the segment at height t, and then for all larger
heights as well. Bisection in t gives the smallest certified height.
"""

from __future__ import annotations

import csv
import enum
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional, TextIO, Union

from scipy.optimize import brentq

from .config import DEFAULT_CONFIG, EULER_GAMMA, LOG_D_m, NumericsConfig
from .criteria import northcott_condition
from .errors import CircleError, DomainError, NotFoundError, WindowError
from .ratios import log_gamma_c_ratio, real_ratio_is_smaller
from .specfun import log_abs_gamma, log_abs_sin_pi, zeta_real

TAU_CEILING = 50.0
CIRCLE_CENTER = 0.5
CIRCLE_RADIUS = 1.1
# log(D_m / 2pi) = log(2 e^gamma)
_LOG_ROOT_RATIO = EULER_GAMMA + math.log(2.0)
_LOG_SQRT_PI = 0.5 * math.log(math.pi)
_LOG_SQRT_2 = 0.5 * math.log(2.0)
# fraction of a segment's width tolerated when matching endpoints to window edges
_EDGE_SLACK = 1e-6


class Branch(enum.Enum):
    """Which ratio is bounded and where its sine factor is smallest."""

    C_INCREASING = "C_increasing"  # [n, n + 1/2], sine factor at alpha
    C_DECREASING = "C_decreasing"  # [n - 1/2, n], sine factor at beta
    R_INCREASING = "R_increasing"  # [2n, 2n + 1], sine factor at alpha
    R_DECREASING = "R_decreasing"  # [2n - 1, 2n], sine factor at beta

    @property
    def complex_ratio(self) -> bool:
        return self in (Branch.C_INCREASING, Branch.C_DECREASING)

    @property
    def increasing(self) -> bool:
        return self in (Branch.C_INCREASING, Branch.R_INCREASING)


def in_window(alpha: float, beta: float, branch: Branch) -> bool:
    """Whether [alpha, beta] lies in one monotonicity window of the branch."""
    if not alpha < beta:
        return False
    period = 0.5 if branch.complex_ratio else 1.0
    slack = _EDGE_SLACK * (beta - alpha)
    # windows are [k p, (k+1) p] alternating increasing/decreasing; even k increasing
    k = math.floor((alpha + slack) / period)
    if beta - slack > (k + 1) * period:
        return False
    # |sin(pi x)| increases on [n, n + 1/2]; |sin(pi x / 2)| on [2n, 2n + 1]
    return (k % 2 == 0) == branch.increasing


def branch_for(alpha: float, beta: float) -> Branch:
    """The branch whose ratio is the minimum on [alpha, beta].

    gamma_r <= gamma_c exactly within 1/2 of an even integer, so that side
    uses the real-ratio certificate and the rest uses the complex one.
    """
    mid = 0.5 * (alpha + beta)
    if real_ratio_is_smaller(mid):
        branch = Branch.R_INCREASING if math.floor(mid) % 2 == 0 else Branch.R_DECREASING
    else:
        branch = Branch.C_INCREASING if mid - math.floor(mid) < 0.5 else Branch.C_DECREASING
    if not (in_window(alpha, beta, branch) and _ratio_side_consistent(alpha, beta)):
        raise WindowError(f"[{alpha}, {beta}] straddles a window or ratio switch")
    return branch


def _ratio_side_consistent(alpha: float, beta: float) -> bool:
    # endpoints may sit exactly on a switch point; compare just inside them
    slack = _EDGE_SLACK * (beta - alpha)
    inner_a, inner_b = alpha + slack, beta - slack
    return real_ratio_is_smaller(inner_a) == real_ratio_is_smaller(inner_b)


def circle_clear(beta: float, t: float) -> bool:
    """Whether every point of [.., beta] x {t} is outside |z - 0.5| < 1.1.

    beta is the point of the segment nearest to 0.5 because beta < 0.5.
    """
    return math.hypot(CIRCLE_CENTER - beta, t) >= CIRCLE_RADIUS


def circle_floor(beta: float) -> float:
    """Smallest t >= 0 with (beta, t) outside the excluded circle."""
    gap = CIRCLE_RADIUS**2 - (CIRCLE_CENTER - beta) ** 2
    return math.sqrt(gap) if gap > 0 else 0.0


def _log_base(beta: float, t: float, log_zeta: float) -> float:
    # log of (1/sqrt(pi)) (D_m/2pi)^{1/2-beta} |Gamma(1-beta-it)| / zeta(1-beta)
    return -_LOG_SQRT_PI + (0.5 - beta) * _LOG_ROOT_RATIO + log_abs_gamma(complex(1.0 - beta, -t)) - log_zeta


def log_certificate(alpha: float, beta: float, t: float, branch: Branch, log_zeta: Optional[float] = None) -> float:
    """log of the left side of the segment certificate (no precondition checks)."""
    if log_zeta is None:
        log_zeta = math.log(zeta_real(1.0 - beta))
    x = alpha if branch.increasing else beta
    base = _log_base(beta, t, log_zeta)
    if branch.complex_ratio:
        return base + 0.5 * log_abs_sin_pi(complex(x, t))
    return _LOG_SQRT_2 + base + log_abs_sin_pi(complex(0.5 * x, 0.5 * t))


def _check_segment(alpha: float, beta: float, t: float, branch: Branch) -> None:
    if not beta < 0.0:
        raise DomainError(f"segment must lie in sigma < 0, got beta = {beta!r}")
    if not in_window(alpha, beta, branch):
        raise WindowError(f"[{alpha}, {beta}] is not inside a {branch.value} window")
    if not circle_clear(beta, t):
        raise CircleError(f"segment [{alpha}, {beta}] at t = {t} meets |z - 0.5| < 1.1")


def certified_condition(alpha: float, beta: float, t: float, branch: Union[Branch, str]) -> bool:
    """Whether the segment certificate holds at height t.

    True certifies the bounded ratio's condition for all sigma in [alpha, beta]
    and all heights >= t. It certifies the Northcott condition itself when the
    branch's ratio is the smaller one on the segment (see ``branch_for``).
    """
    branch = Branch(branch)
    _check_segment(alpha, beta, t, branch)
    lc = log_certificate(alpha, beta, t, branch)
    return lc > 0.0


def min_tau(
    alpha: float,
    beta: float,
    branch: Optional[Union[Branch, str]] = None,
    config: NumericsConfig = DEFAULT_CONFIG,
) -> float:
    """Smallest certified height for [alpha, beta].

    The branch defaults to ``branch_for(alpha, beta)``. Heights are restricted
    to those keeping the segment outside the excluded circle.
    """
    branch = branch_for(alpha, beta) if branch is None else Branch(branch)
    t_floor = circle_floor(beta)
    _check_segment(alpha, beta, t_floor, branch)
    log_zeta = math.log(zeta_real(1.0 - beta))

    def ok(t: float) -> bool:
        return log_certificate(alpha, beta, t, branch, log_zeta) > 0.0

    if ok(t_floor):
        return t_floor
    lo = t_floor
    hi = max(t_floor * (1.0 + 1e-3), 1e-14)
    while not ok(hi):
        lo = hi
        hi *= 4.0
        if hi > TAU_CEILING:
            if ok(TAU_CEILING):
                hi = TAU_CEILING
                break
            raise NotFoundError(f"no certified height up to {TAU_CEILING} on [{alpha}, {beta}]")
    tol = config.bisection_rel_tol
    for _ in range(400):
        if hi - lo <= tol * hi:
            break
        mid = 0.5 * (lo + hi)
        if ok(mid):
            hi = mid
        else:
            lo = mid
    return hi


# -- curves --------------------------------------------------------------------


@dataclass(frozen=True)
class Subinterval:
    alpha: float
    beta: float
    branch: Branch
    tau_min: float

    def __post_init__(self):
        if not self.alpha < self.beta:
            raise ValueError("alpha must be below beta")


@dataclass(frozen=True)
class BoundaryCurve:
    segments: tuple[Subinterval, ...]
    delta: float
    range: tuple[float, float]

    def __post_init__(self):
        lo, hi = self.range
        if self.segments:
            if self.segments[0].alpha != lo or self.segments[-1].beta != hi:
                raise ValueError("segments do not cover the range")
            for a, b in zip(self.segments, self.segments[1:]):
                if a.beta != b.alpha:
                    raise ValueError("segments have a gap or overlap")

    def points(self) -> list[tuple[float, float]]:
        """(alpha, tau_min) for every segment."""
        return [(seg.alpha, seg.tau_min) for seg in self.segments]

    def tau_at(self, sigma: float) -> float:
        """Certified height over sigma (the larger one on shared endpoints)."""
        best = None
        for seg in self.segments:
            if seg.alpha <= sigma <= seg.beta:
                best = seg.tau_min if best is None else max(best, seg.tau_min)
        if best is None:
            raise DomainError(f"sigma = {sigma!r} is outside the curve")
        return best

    def min_distance_to(self, point: complex = CIRCLE_CENTER) -> float:
        """Smallest distance from point to a certified corner (alpha or beta, tau_min)."""
        return min(
            min(abs(complex(seg.alpha, seg.tau_min) - point), abs(complex(seg.beta, seg.tau_min) - point))
            for seg in self.segments
        )


def _cut_points(lo: float, hi: float) -> list[float]:
    # integers and half-integers strictly inside (lo, hi)
    k0 = math.floor(2.0 * lo) + 1
    k1 = math.ceil(2.0 * hi) - 1
    return [k / 2.0 for k in range(k0, k1 + 1) if lo < k / 2.0 < hi]


def tile(lo: float, hi: float, delta: float) -> list[tuple[float, float]]:
    """Segments of length <= delta from lo, restarted at every cut point."""
    if not lo < hi:
        raise DomainError(f"need from < to, got {lo!r}, {hi!r}")
    if not delta > 0.0:
        raise DomainError(f"delta must be positive, got {delta!r}")
    edges = [lo] + _cut_points(lo, hi) + [hi]
    out = []
    for a, b in zip(edges, edges[1:]):
        count = max(1, math.ceil((b - a) / delta - 1e-9))
        nodes = [a + k * delta for k in range(count)] + [b]
        out.extend(zip(nodes, nodes[1:]))
    return out


def _segment_task(args) -> Subinterval:
    alpha, beta, config = args
    branch = branch_for(alpha, beta)
    return Subinterval(alpha, beta, branch, min_tau(alpha, beta, branch, config))


def build_boundary(
    lo: float,
    hi: float,
    delta: Optional[float] = None,
    config: NumericsConfig = DEFAULT_CONFIG,
    workers: int = 1,
) -> BoundaryCurve:
    """Certified minimal heights over [lo, hi], segment by segment."""
    delta = config.delta if delta is None else delta
    if not hi <= -0.05:
        raise DomainError(f"the trace must stop at or before -0.05, got {hi!r}")
    tasks = [(a, b, config) for a, b in tile(lo, hi, delta)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            segments = list(pool.map(_segment_task, tasks, chunksize=16))
    else:
        segments = [_segment_task(t) for t in tasks]
    return BoundaryCurve(tuple(segments), delta, (lo, hi))


# -- circles around the negative integers --------------------------------------

ANGULAR_STEPS = 512


def _radial_boundary(center: int, theta: float, tol: float) -> float:
    """Radius along one ray beyond which the exact condition holds."""
    direction = complex(math.cos(theta), math.sin(theta))

    def holds(r: float) -> bool:
        return northcott_condition(center + r * direction)[0]

    lo, hi = 0.0, 1e-14
    while not holds(hi):
        lo = hi
        hi *= 2.0
        if hi > 0.5:
            raise NotFoundError(f"condition never holds along theta = {theta} from {center}")
    while hi - lo > tol * hi:
        mid = 0.5 * (lo + hi)
        if holds(mid):
            hi = mid
        else:
            lo = mid
    return hi


def exact_circle_radius(center: int, config: NumericsConfig = DEFAULT_CONFIG) -> float:
    """Largest radius where the exact condition fails, over rays at steps of pi/512."""
    _check_center(center)
    tol = config.bisection_rel_tol
    return max(_radial_boundary(center, math.pi * k / ANGULAR_STEPS, tol) for k in range(ANGULAR_STEPS + 1))


def _certified_segments(center: int, scale: float) -> list[tuple[float, float]]:
    width = 1e-3 * scale
    half_span = 1.5 * scale
    count = math.ceil(half_span / width - 1e-9)
    left = [center - k * width for k in range(count, -1, -1)]
    right = [center + k * width for k in range(count + 1)]
    return list(zip(left, left[1:])) + list(zip(right, right[1:]))


def certified_circle_radius(center: int, config: NumericsConfig = DEFAULT_CONFIG) -> float:
    """Radius enclosing every positive certified height near the center.

    Segments of width 1e-3 r are laid on both sides of the center, where r is
    the exact-condition radius. Each segment contributes its point
    (alpha, tau_alpha) when tau_alpha > 0.
    """
    _check_center(center)
    scale = exact_circle_radius(center, config)
    best = 0.0
    for alpha, beta in _certified_segments(center, scale):
        t = min_tau(alpha, beta, config=config)
        if t > 0.0:
            best = max(best, math.hypot(alpha - center, t))
    return best


def _check_center(center: int) -> None:
    if int(center) != center or center > -1:
        raise DomainError(f"center must be a negative integer, got {center!r}")


def fit_circle_radius(center: int, method: str = "certified", config: NumericsConfig = DEFAULT_CONFIG) -> float:
    """Radius of the circle around a negative integer that the boundary fits in.

    ``method="certified"`` uses the segment certificates (the default);
    ``method="exact"`` bisects the exact condition along rays.
    """
    if method == "certified":
        return certified_circle_radius(center, config)
    if method == "exact":
        return exact_circle_radius(center, config)
    raise ValueError(f"unknown method {method!r}")


# -- scalar checks -------------------------------------------------------------


def sigma1_residual(sigma: float) -> float:
    """log of gamma_c(sigma) D_m^{1/2-sigma} / zeta(1-sigma) on the real axis."""
    return log_gamma_c_ratio(sigma) + (0.5 - sigma) * LOG_D_m - math.log(zeta_real(1.0 - sigma))


def sigma1_equation(sigma: float) -> float:
    """(2 e^gamma)^{1/2-sigma} / zeta(1-sigma) |Gamma(1-sigma)/Gamma(sigma)|^{1/2} - 1."""
    log_lhs = (
        (0.5 - sigma) * _LOG_ROOT_RATIO
        - math.log(zeta_real(1.0 - sigma))
        + 0.5 * (log_abs_gamma(1.0 - sigma) - log_abs_gamma(sigma))
    )
    return math.expm1(log_lhs)


def sigma1(xtol: float = 1e-12) -> float:
    """Abscissa in (-0.75, -0.6) where the real-axis condition switches off."""
    return brentq(sigma1_residual, -0.75, -0.6, xtol=xtol)


def truncated_polar(r: float, x: float, terms: int = 4) -> float:
    """Four-term lower bound for Re psi(0.5 + r e^{ix}) in polar form."""
    c = math.cos(x)
    total = -EULER_GAMMA
    for k in range(1, terms + 1):
        num = 4 * r * r + 4 * (k - 1) * r * c - 2 * k + 1
        den = 4 * k * r * r + 4 * (2 * k * k - k) * r * c + 4 * k**3 - 4 * k * k + k
        total += num / den
    return total


def psi_positivity_check(r: float = 1.1, x: float = 0.0) -> float:
    return truncated_polar(r, x)


# -- piecewise envelopes -------------------------------------------------------

ENVELOPE_RHO_M1 = 9.5e-2


def envelope_left(sigma: float, s1: Optional[float] = None, rho: float = ENVELOPE_RHO_M1) -> float:
    """Circle-shaped envelope for sigma in [-1.5, sigma_1]."""
    s1 = sigma1() if s1 is None else s1
    if not -1.5 <= sigma <= s1:
        raise DomainError(f"sigma = {sigma!r} outside [-1.5, {s1}]")
    d = sigma + 1.0
    return math.sqrt(rho * rho - d * d) if abs(d) <= rho else 0.0


def envelope_right(sigma: float, s1: Optional[float] = None) -> float:
    """Envelope for sigma in (sigma_1, -0.1]."""
    s1 = sigma1() if s1 is None else s1
    if not s1 < sigma <= -0.1:
        raise DomainError(f"sigma = {sigma!r} outside ({s1}, -0.1]")
    if sigma <= -0.65:
        return math.sqrt(sigma - s1 + 0.1)
    log_x = (2 * sigma - 1) * _LOG_ROOT_RATIO + 2 * math.log(zeta_real(1 - sigma)) - 2 * log_abs_gamma(1 - sigma)
    return 0.82 * math.exp(log_x)


# -- grids and CSV -------------------------------------------------------------


def _axis(lo: float, hi: float, step: float) -> list[float]:
    if hi < lo:
        return []
    count = int(math.floor((hi - lo) / step + 1e-9))
    return [lo + k * step for k in range(count + 1)]


def grid_scan(rect: tuple[float, float, float, float], step: float) -> list[tuple[complex, bool]]:
    """Evaluate the exact condition on a rectangular grid, row by row in tau."""
    s_lo, s_hi, t_lo, t_hi = rect
    if not step > 0.0:
        raise DomainError(f"step must be positive, got {step!r}")
    sigmas = _axis(s_lo, s_hi, step)
    taus = _axis(t_lo, t_hi, step)
    if sigmas and not s_hi < 0.0:
        raise DomainError(f"grid must lie in sigma < 0, got sigma_hi = {s_hi!r}")
    out = []
    for t in taus:
        for s in sigmas:
            z = complex(s, t)
            out.append((z, northcott_condition(z)[0]))
    return out


def _fmt(x: float, digits: int) -> str:
    return f"{x:.{digits}g}"


def write_boundary_csv(curve: BoundaryCurve, out: TextIO, digits: int = 17) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["sigma_lo", "sigma_hi", "tau_min"])
    for seg in curve.segments:
        w.writerow([_fmt(seg.alpha, digits), _fmt(seg.beta, digits), _fmt(seg.tau_min, digits)])


def write_grid_csv(rows: Iterable[tuple[complex, bool]], out: TextIO, digits: int = 17) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["sigma", "tau", "holds"])
    for z, holds in rows:
        w.writerow([_fmt(z.real, digits), _fmt(z.imag, digits), "true" if holds else "false"])


def read_boundary_csv(inp: TextIO) -> list[tuple[float, float, float]]:
    r = csv.DictReader(inp)
    return [(float(row["sigma_lo"]), float(row["sigma_hi"]), float(row["tau_min"])) for row in r]

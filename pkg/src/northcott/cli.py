"""Command-line front end.

Exit codes: 0 decided / success, 1 usage or input error, 2 verdict Unknown,
3 point in a region where no result applies.
"""

from __future__ import annotations

import argparse
import io
import math
import os
import sys
import tempfile
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import boundary, counting, critstrip, criteria, radii
from .config import CONSTANTS, PUBLISHED_TABLE_CONSTANTS, NumericsConfig
from .errors import NorthcottError, UnsupportedRegionError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_UNKNOWN = 2
EXIT_UNSUPPORTED = 3

CSV_DIGITS = 17  # enough to round-trip a double
TEXT_DIGITS = 6

EPILOG = (
    "exit codes: 0 decided or success, 1 usage/input error, "
    "2 verdict Unknown, 3 unsupported region. "
    "NORTHCOTT_PRECISION sets the working precision in digits."
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    command: str
    numerics: NumericsConfig
    output_path: Optional[str] = None
    format: str = "text"
    args: argparse.Namespace = field(default_factory=argparse.Namespace)

    @property
    def digits(self) -> int:
        return CSV_DIGITS if self.format == "csv" else TEXT_DIGITS


def fmt(x: Optional[float], digits: int) -> str:
    if x is None:
        return ""
    return f"{x:.{digits}g}"


def write_output(text: str, path: Optional[str]) -> None:
    """Write to stdout, or atomically to path via a temporary file and rename."""
    if path is None:
        sys.stdout.write(text)
        return
    parent = os.path.dirname(os.path.abspath(path))
    if not os.path.isdir(parent):
        raise UsageError(f"output directory {parent} does not exist")
    fd, tmp = tempfile.mkstemp(dir=parent, prefix=".northcott-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _table(header: Sequence[str], rows: Sequence[Sequence[str]], fmt_: str) -> str:
    if fmt_ == "csv":
        lines = [",".join(header)] + [",".join(r) for r in rows]
        return "\n".join(lines) + "\n"
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(header)]
    out = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    out += ["  ".join((c or "-").rjust(w) for c, w in zip(r, widths)) for r in rows]
    return "\n".join(out) + "\n"


# -- commands ------------------------------------------------------------------


def cmd_classify(rc: RunConfig) -> tuple[str, int]:
    s = complex(rc.args.sigma, rc.args.tau)
    try:
        v = criteria.classify(s)
    except UnsupportedRegionError as exc:
        return f"unsupported region: {exc}\n", EXIT_UNSUPPORTED
    d = rc.digits
    rows = [[v.kind.value, fmt(v.margin, d), v.theorem_tag, fmt(v.threshold, d)]]
    text = _table(["kind", "margin", "tag", "threshold"], rows, rc.format)
    return text, EXIT_OK if v.decided else EXIT_UNKNOWN


def cmd_constants(rc: RunConfig) -> tuple[str, int]:
    cfg = rc.numerics
    t0 = radii.tau0(cfg)
    items = [
        ("euler_gamma", CONSTANTS.euler_gamma),
        ("D_m", CONSTANTS.d_m),
        ("D_M", CONSTANTS.d_M),
        ("tau0", t0),
        ("sigma1", boundary.sigma1()),
        ("rho_m1_numerical", boundary.fit_circle_radius(-1, config=cfg)),
        ("cosh_pi_tau0", radii.cosh_pi_tau0(cfg)),
        ("cover_radius", radii.cover_radius(cfg)),
        ("covering_value", radii.covering_value(cfg)),
        ("psi_check", boundary.psi_positivity_check()),
        ("I_integral", critstrip.i_integral(cfg)),
    ]
    rows = [[k, fmt(v, rc.digits)] for k, v in items]
    return _table(["name", "value"], rows, rc.format), EXIT_OK


def cmd_table(rc: RunConfig) -> tuple[str, int]:
    centers = rc.args.centers
    for c in centers:
        if not -10 <= c <= -1:
            raise UsageError(f"centers must lie in -10..-1, got {c}")
    consts = PUBLISHED_TABLE_CONSTANTS if rc.args.published_constants else CONSTANTS
    rows = []
    for c in centers:
        numerical = boundary.fit_circle_radius(c, method=rc.args.method, config=rc.numerics)
        row = radii.radii_row(c, numerical, rc.numerics, consts)
        rows.append(
            [
                str(c),
                fmt(row.numerical_radius, rc.digits),
                fmt(row.closed_form_radius, rc.digits),
                fmt(row.non_northcott_radius, rc.digits),
            ]
        )
    header = ["center", "numerical_radius", "closed_form_radius", "non_northcott_radius"]
    return _table(header, rows, rc.format), EXIT_OK


def cmd_boundary(rc: RunConfig) -> tuple[str, int]:
    a = rc.args
    curve = boundary.build_boundary(a.lo, a.hi, a.delta, rc.numerics, workers=a.workers)
    if rc.format == "csv":
        buf = io.StringIO()
        boundary.write_boundary_csv(curve, buf, rc.digits)
        return buf.getvalue(), EXIT_OK
    rows = [[fmt(s.alpha, rc.digits), fmt(s.beta, rc.digits), fmt(s.tau_min, rc.digits)] for s in curve.segments]
    return _table(["sigma_lo", "sigma_hi", "tau_min"], rows, "text"), EXIT_OK


def cmd_grid(rc: RunConfig) -> tuple[str, int]:
    a = rc.args
    data = boundary.grid_scan((a.sigma_lo, a.sigma_hi, a.tau_lo, a.tau_hi), a.step)
    if rc.format == "csv":
        buf = io.StringIO()
        boundary.write_grid_csv(data, buf, rc.digits)
        return buf.getvalue(), EXIT_OK
    rows = [[fmt(z.real, rc.digits), fmt(z.imag, rc.digits), "true" if h else "false"] for z, h in data]
    return _table(["sigma", "tau", "holds"], rows, "text"), EXIT_OK


def cmd_bs(rc: RunConfig) -> tuple[str, int]:
    s = complex(rc.args.sigma, rc.args.tau)
    try:
        r = critstrip.b_threshold_report(s, rc.numerics)
    except NorthcottError as exc:
        if not 0.5 < s.real < 1.0:
            return f"unsupported region: {exc}\n", EXIT_UNSUPPORTED
        raise
    d = rc.digits
    rows = [
        [
            fmt(s.real, d),
            fmt(s.imag, d),
            fmt(r.value, d),
            fmt(r.moment.value.real, d),
            fmt(r.i_value, d),
            str(r.moment.truncation_prime),
            fmt(r.rel_error_bound, 3),
        ]
    ]
    header = ["sigma", "tau", "B", "A", "I", "truncation_prime", "rel_error_bound"]
    return _table(header, rows, rc.format), EXIT_OK


def cmd_count(rc: RunConfig) -> tuple[str, int]:
    a = rc.args
    inp = counting.CountBoundInput(complex(a.sigma, a.tau), a.B, a.Q)
    r = counting.count_bound(inp)
    d = rc.digits
    rows = [
        [
            fmt(r.log_bound, d),
            fmt(r.bound, d),
            fmt(r.a_s, d),
            fmt(r.degree_cutoff, d),
            fmt(r.log_discriminant_cutoff, d),
        ]
    ]
    header = ["log_bound", "bound", "a_s", "D", "log_X"]
    text = _table(header, rows, rc.format)
    if rc.format == "text":
        text += f"note: {counting.Q_CAVEAT} (Q = {a.Q:g})\n"
    return text, EXIT_OK


COMMANDS = {
    "classify": cmd_classify,
    "constants": cmd_constants,
    "table": cmd_table,
    "boundary": cmd_boundary,
    "grid": cmd_grid,
    "bs": cmd_bs,
    "count": cmd_count,
}


# -- parsing -------------------------------------------------------------------


def _positive(x: str) -> float:
    v = float(x)
    if not v > 0.0 or not math.isfinite(v):
        raise argparse.ArgumentTypeError(f"must be a positive number, got {x}")
    return v


def _finite(x: str) -> float:
    v = float(x)
    if not math.isfinite(v):
        raise argparse.ArgumentTypeError(f"must be finite, got {x}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--output", "-o", help="write to this file (atomically) instead of stdout")
    common.add_argument("--format", choices=("csv", "text"), default=None, help="output format")
    common.add_argument("--precision", type=int, default=None, help="working precision in digits")
    common.add_argument("--bisection-rel-tol", type=_positive, default=None)
    common.add_argument("--quadrature-abs-tol", type=_positive, default=None)

    parser = _Parser(prog="northcott", description="Northcott property at values of Dedekind zeta functions.", epilog=EPILOG)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="verdict at s = sigma + i tau", epilog=EPILOG)
    p.add_argument("--sigma", type=_finite, required=True)
    p.add_argument("--tau", type=_finite, default=0.0)

    sub.add_parser("constants", parents=[common], help="print the constants in use", epilog=EPILOG)

    p = sub.add_parser("table", parents=[common], help="radii around negative integers (CSV)", epilog=EPILOG)
    p.add_argument("--centers", type=int, nargs="*", default=[-1, -2, -3, -4, -5])
    p.add_argument("--method", choices=("certified", "exact"), default="certified")
    p.add_argument(
        "--published-constants",
        action="store_true",
        help="closed-form columns with D_m = 22.38, D_M = 78.43",
    )

    p = sub.add_parser("boundary", parents=[common], help="certified boundary staircase (CSV)", epilog=EPILOG)
    p.add_argument("--from", dest="lo", type=_finite, default=-1.5)
    p.add_argument("--to", dest="hi", type=_finite, default=-0.1)
    p.add_argument("--delta", type=_positive, default=None)
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("grid", parents=[common], help="condition on a grid (CSV)", epilog=EPILOG)
    p.add_argument("--sigma-lo", type=_finite, required=True)
    p.add_argument("--sigma-hi", type=_finite, required=True)
    p.add_argument("--tau-lo", type=_finite, required=True)
    p.add_argument("--tau-hi", type=_finite, required=True)
    p.add_argument("--step", type=_positive, required=True)

    p = sub.add_parser("bs", parents=[common], help="threshold B(s) for 1/2 < sigma < 1", epilog=EPILOG)
    p.add_argument("--sigma", type=_finite, required=True)
    p.add_argument("--tau", type=_finite, default=0.0)

    p = sub.add_parser("count", parents=[common], help="bound on #{K : |zeta_K(s)| <= B}", epilog=EPILOG)
    p.add_argument("--sigma", type=_finite, required=True)
    p.add_argument("--tau", type=_finite, default=0.0)
    p.add_argument("--B", type=_positive, required=True)
    p.add_argument("--Q", type=_positive, default=1.0, help="unknown constant of the field count; default 1")
    return parser


DEFAULT_FORMAT = {"classify": "text", "constants": "text", "bs": "text", "count": "text"}


def make_run_config(ns: argparse.Namespace) -> RunConfig:
    base = NumericsConfig.from_env()
    numerics = base.with_overrides(
        working_precision=ns.precision,
        bisection_rel_tol=ns.bisection_rel_tol,
        quadrature_abs_tol=ns.quadrature_abs_tol,
        delta=getattr(ns, "delta", None),
    )
    fmt_ = ns.format or DEFAULT_FORMAT.get(ns.command, "csv")
    return RunConfig(command=ns.command, numerics=numerics, output_path=ns.output, format=fmt_, args=ns)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        rc = make_run_config(ns)
        text, code = COMMANDS[rc.command](rc)
        write_output(text, rc.output_path)
    except (UsageError, ValueError, NorthcottError) as exc:
        if isinstance(exc, UnsupportedRegionError):
            sys.stderr.write(f"unsupported region: {exc}\n")
            return EXIT_UNSUPPORTED
        sys.stderr.write(f"northcott: error: {exc}\n")
        return EXIT_USAGE
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

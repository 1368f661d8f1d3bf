#!/usr/bin/env python3
"""Classify every point of a rectangular grid and write the verdicts to CSV."""

import argparse
import csv
import sys

from northcott.criteria import classify
from northcott.errors import DomainError


def axis(lo, hi, step):
    count = int((hi - lo) / step + 1e-9)
    return [round(lo + k * step, 12) for k in range(count + 1)]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sigma-lo", type=float, default=-3.0)
    ap.add_argument("--sigma-hi", type=float, default=-0.05)
    ap.add_argument("--tau-lo", type=float, default=0.0)
    ap.add_argument("--tau-hi", type=float, default=2.0)
    ap.add_argument("--step", type=float, default=0.05)
    ap.add_argument("-o", "--output", default="-")
    args = ap.parse_args()

    out = sys.stdout if args.output == "-" else open(args.output, "w", newline="")
    try:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["sigma", "tau", "kind", "tag"])
        for sigma in axis(args.sigma_lo, args.sigma_hi, args.step):
            for tau in axis(args.tau_lo, args.tau_hi, args.step):
                try:
                    v = classify(complex(sigma, tau))
                    w.writerow([repr(sigma), repr(tau), v.kind.value, v.theorem_tag])
                except DomainError:
                    w.writerow([repr(sigma), repr(tau), "unsupported", ""])
    finally:
        if out is not sys.stdout:
            out.close()


if __name__ == "__main__":
    main()

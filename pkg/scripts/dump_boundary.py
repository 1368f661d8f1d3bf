#!/usr/bin/env python3
"""Write the certified boundary and the two envelopes to CSV."""

import argparse
import csv
import sys

from northcott import boundary as bd


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--from", dest="lo", type=float, default=-1.5)
    ap.add_argument("--to", dest="hi", type=float, default=-0.1)
    ap.add_argument("--delta", type=float, default=0.0025)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("-o", "--output", default="-")
    args = ap.parse_args()

    curve = bd.build_boundary(args.lo, args.hi, args.delta, workers=args.workers)
    s1 = bd.sigma1()
    out = sys.stdout if args.output == "-" else open(args.output, "w", newline="")
    try:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["sigma_lo", "sigma_hi", "branch", "tau_min", "envelope"])
        for seg in curve.segments:
            if seg.beta <= s1:
                env = bd.envelope_left(seg.alpha, s1)
            elif seg.beta > s1:
                env = bd.envelope_right(seg.beta, s1)
            else:
                env = ""
            w.writerow([repr(seg.alpha), repr(seg.beta), seg.branch.value, repr(seg.tau_min), env if env == "" else repr(env)])
    finally:
        if out is not sys.stdout:
            out.close()
    print(f"{len(curve.segments)} segments, closest corner to 0.5 at {curve.min_distance_to(0.5):.6f}", file=sys.stderr)


if __name__ == "__main__":
    main()

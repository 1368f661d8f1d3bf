#!/usr/bin/env python3
"""Print the radii table around -1..-5 next to the published values.

Run with --published-constants to use the rounded discriminant constants the
published table was computed with.
"""

import argparse

from northcott import boundary, radii
from northcott.config import CONSTANTS, PUBLISHED_TABLE_CONSTANTS, NumericsConfig

PUBLISHED = {
    -1: (9.260260274818e-2, None, 3.415443142941e-6),
    -2: (2.105502084026e-2, 6.388919396319e-2, 1.330026824001e-8),
    -3: (4.474651495645e-6, 5.742868294706e-5, 9.877567910286e-12),
    -4: (1.135531168473e-4, 4.516050376141e-4, 3.572719521466e-15),
    -5: (6.138786399296e-11, 1.190762805871e-9, 8.022539291403e-19),
}


def rel(a, b):
    return "" if a is None or b is None else f"{a / b - 1:+.2e}"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--published-constants", action="store_true")
    ap.add_argument("--method", choices=["certified", "exact"], default="certified")
    ap.add_argument("--precision", type=int, default=40, help="digits for the closed-form columns")
    args = ap.parse_args()

    consts = PUBLISHED_TABLE_CONSTANTS if args.published_constants else CONSTANTS
    cfg = NumericsConfig(working_precision=args.precision)
    print(f"{'center':>6} {'numerical':>13} {'dev':>10} {'closed form':>13} {'dev':>10} {'non-Northcott':>13} {'dev':>10}")
    for center, (num_ref, cf_ref, nn_ref) in PUBLISHED.items():
        num = boundary.fit_circle_radius(center, method=args.method)
        cf = radii.closed_form_radius(center, config=cfg, constants=consts)
        nn = radii.non_northcott_radius(-center, config=cfg, constants=consts)
        cf_txt = "-" if cf is None else f"{cf:.6e}"
        print(
            f"{center:>6} {num:>13.6e} {rel(num, num_ref):>10} {cf_txt:>13} {rel(cf, cf_ref):>10} "
            f"{nn:>13.6e} {rel(nn, nn_ref):>10}"
        )


if __name__ == "__main__":
    main()

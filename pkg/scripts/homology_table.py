#!/usr/bin/env python3
"""Degree-1 and degree-2 homology of the matrix and Steinberg models.

Builds the Chevalley-Eilenberg boundary in degrees 2 and 3 for each requested
row and prints H_1, H_2, and the theorem claim the computed value must meet.
A row whose degree-3 wedge basis exceeds the cap is reported as skipped.
"""

import argparse
import time

from superstein.errors import ResourceLimitError
from superstein.homology import UCE_ASSUMPTION, uce_verdict
from superstein.matrices import MatrixShape
from superstein.superalgebra import builtin

DEFAULT_ROWS = [
    ("st", "field", "2|1"),
    ("st", "grassmann1", "2|1"),
    ("st", "field", "3|1"),
    ("st", "grassmann1", "3|1"),
    ("st", "field", "2|2"),
    ("st", "grassmann1", "2|2"),
    ("st_sharp", "field", "2|2"),
    ("st_sharp", "grassmann1", "2|2"),
    ("st", "field", "3|2"),
    ("sl", "field", "3|2"),
    ("sl", "grassmann1", "3|2"),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-wedge", type=int, default=50000, help="degree-3 wedge basis cap")
    ap.add_argument("--rows", default=None, help="comma list of source:algebra:shape triples")
    args = ap.parse_args()
    rows = DEFAULT_ROWS
    if args.rows:
        rows = [tuple(r.split(":")) for r in args.rows.split(",")]

    print(UCE_ASSUMPTION)
    print()
    header = f"{'source':<9} {'algebra':<12} {'shape':<6} {'dim':>5} {'L2':>6} {'L3':>7} {'h1':>3} {'h2':>3}  claim"
    print(header)
    print("-" * len(header))
    for source, name, shp in rows:
        t0 = time.monotonic()
        try:
            row = uce_verdict(source, builtin(name), MatrixShape.parse(shp), max_wedge3=args.max_wedge)
        except ResourceLimitError as err:
            print(f"{source:<9} {name:<12} {shp:<6} skipped ({err})")
            continue
        r = row.report
        assert r.dd_zero
        verdict = ""
        if row.match is True:
            verdict = "  [verified]"
        elif row.match is False:
            verdict = f"  [MISMATCH: expected {row.expected}]"
        print(
            f"{source:<9} {name:<12} {shp:<6} {r.dim:>5} {r.lambda2:>6} {r.lambda3:>7}"
            f" {r.h1_dim:>3} {r.h2_dim:>3}  {row.claim}{verdict}"
            f"  ({time.monotonic() - t0:.2f}s)"
        )


if __name__ == "__main__":
    main()

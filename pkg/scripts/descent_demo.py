#!/usr/bin/env python3
"""Walk the norm-descent from a chosen start point and print the trace.

Usage: python3 scripts/descent_demo.py "1 1i 3" --start 1,1 --tol 1e-10
"""

import argparse
import sys

from dalembert.cli import parse_polynomial
from dalembert.descent import descend


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("poly", help="polynomial, a0 first, e.g. '1 1i 3'")
    parser.add_argument("--start", default="0,0", help="start point as re,im")
    parser.add_argument("--tol", type=float, default=1e-10)
    parser.add_argument("--max-iter", type=int, default=200)
    args = parser.parse_args()

    re_, im_ = (float(v) for v in args.start.split(","))
    result = descend(parse_polynomial(args.poly), complex(re_, im_),
                     tol=args.tol, max_iter=args.max_iter)

    print(f"{'iter':>5} {'re':>22} {'im':>22} {'residual':>14} {'s':>12} {'k':>3}")
    for row in result.trace:
        print(f"{row.iteration:>5} {row.point.real:>22.16g} {row.point.imag:>22.16g} "
              f"{row.residual:>14.6e} {row.s:>12.4e} {row.k:>3}")
    status = "converged" if result.converged else "NOT converged"
    print(f"\n{status}: root ~ {result.root}, residual {result.residual:.3e}, "
          f"{result.iterations} iterations")
    return 0 if result.converged else 2


if __name__ == "__main__":
    sys.exit(main())

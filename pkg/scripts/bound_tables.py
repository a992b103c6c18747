#!/usr/bin/env python3
"""Print bound reports for a grid of (q, k, n) triples.

    python3 scripts/bound_tables.py --q 2,3 --k 2,3,4 --n 100,1000
    python3 scripts/bound_tables.py --q 2 --k 2 --n 100 --ceil
"""

import argparse
import sys

from fpcodes.bounds import bound_report


def int_list(text):
    return [int(tok) for tok in text.split(",") if tok]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", type=int_list, default=[2, 3])
    ap.add_argument("--k", type=int_list, default=[2, 3])
    ap.add_argument("--n", type=int_list, default=[100, 1000])
    ap.add_argument("--ceil", action="store_true", help="round real-valued bounds up to integers")
    args = ap.parse_args(argv)
    first = True
    for q in args.q:
        for k in args.k:
            for n in args.n:
                if n <= k:
                    continue
                if not first:
                    print()
                first = False
                print(bound_report(q, k, n).serialize(ceil_reals=args.ceil))
    return 0


if __name__ == "__main__":
    sys.exit(main())

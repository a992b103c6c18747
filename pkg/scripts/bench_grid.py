#!/usr/bin/env python3
"""Run the construction benchmark over a parameter grid.

Thin wrapper over `fpcodes bench`; kept as a script so grids used in
write-ups are reproducible from the command line.

    python3 scripts/bench_grid.py
    python3 scripts/bench_grid.py --grid "q=2,3,4;k=2,3;n=10,30,50" --seed 7
"""

import argparse
import sys

from fpcodes.cli import main as cli_main

DEFAULT_GRID = "q=2,3,4;k=2,3;n=10,30,50"


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--grid", default=DEFAULT_GRID, help="semicolon-joined key=v1,v2 terms")
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)
    return cli_main(["bench", "--grid", args.grid, "--seed", str(args.seed)])


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Scan growth exponents of the weighted squarefree sum S(x) = sum C^Omega(n) f(n).

Prints one line per checkpoint with the running exponent log S(x) / log x,
for each requested weight C and exclusion order kappa.
"""

import argparse
import sys

from factorbench.counting import growth_exponents
from factorbench.factorizations import build_factorisation_tables
from factorbench.sieve import build_sieve


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--limit", type=int, default=1_000_000)
    parser.add_argument("--c", type=float, nargs="+", default=[2.0])
    parser.add_argument("--kappa", type=int, nargs="+", default=[2])
    args = parser.parse_args()

    tables = build_sieve(args.limit)
    ftables = build_factorisation_tables(args.limit, k_max=0, budget=30_000_000)
    xs = []
    x = 1000
    while x <= args.limit:
        xs.append(x)
        x *= 10
    for c in args.c:
        c = int(c) if float(c).is_integer() else c
        for kappa in args.kappa:
            rows = growth_exponents(xs, c, kappa, ftables, tables)
            for x, exponent in rows:
                print(f"C={c} kappa={kappa} x={x} exponent={exponent:.6f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Fit the empirical constants used by the counting inequality checks.

Reports C1, C2 for the kappa-free counting bound and C2 for the
prime-reciprocal-sum fact, on a decade grid up to --limit.  The constants
are descriptive outputs of the scan, not asserted values.
"""

import argparse
import sys

from factorbench.counting import fit_counting_constants, fit_prime_sum_constant
from factorbench.sieve import build_sieve


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--limit", type=int, default=1_000_000)
    parser.add_argument("--kappa", type=int, nargs="+", default=[2, 3])
    args = parser.parse_args()

    tables = build_sieve(args.limit)
    xs = []
    x = 100
    while x <= args.limit:
        xs.append(x)
        x *= 10
    c1, c2 = fit_counting_constants(xs, tuple(args.kappa), tables)
    print(f"counting bound: C1={c1:.9f} C2={c2:.9f} (grid {xs[0]}..{xs[-1]})")
    prime_xs = xs + [x for x in (10**7, 10**8) if tables.limit**2 >= x]
    c2p = fit_prime_sum_constant(prime_xs, tables)
    print(f"prime reciprocal sum: C2={c2p:.9f} (grid {prime_xs[0]}..{prime_xs[-1]})")
    return 0


if __name__ == "__main__":
    sys.exit(main())

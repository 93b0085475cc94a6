#!/usr/bin/env python3
"""Run the full reproduction report and write it as JSON.

Defaults match the headline experiments (sieve to 10^6); pass a smaller
--limit for a quick smoke run.
"""

import argparse
import json
import sys

from factorbench.config import RunConfig
from factorbench.reproduce import reproduce_report


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--limit", type=int, default=1_000_000)
    parser.add_argument("--seed", type=int, default=12345)
    parser.add_argument("--out", help="output path; stdout if omitted")
    args = parser.parse_args()

    config = RunConfig(sieve_limit=args.limit, seed=args.seed)
    report = reproduce_report(config)
    text = json.dumps(report, indent=2, default=str) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Run the full identity-verification suite and print the text report.

By default this covers the four presets plus 200 randomized parameter
sets; exits nonzero if any check fails.

Usage: python scripts/run_verification.py [--n-max N] [--m-max M]
       [--random-sets K] [--seed S]
"""

import argparse
import sys

from trioct import SuiteConfig, run_suite


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-max", type=int, default=40)
    parser.add_argument("--m-max", type=int, default=20)
    parser.add_argument("--random-sets", type=int, default=200)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    config = SuiteConfig(
        n_max=args.n_max,
        m_max=args.m_max,
        random_sets=args.random_sets,
        seed=args.seed,
    )
    report = run_suite(config)
    sys.stdout.write(report.to_text())
    return 1 if report.total_failures else 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Exhaustively check the binomial-tail inequalities and report every
counterexample with its parity class.

The interesting output is the set of degenerate points where the four-term
and eight-term inequalities fail as literally stated; both sets sit entirely
at half-integer cutoffs (some s_i - t odd) and vanish on the
parity-consistent subgrid.

Usage: python scripts/scan_tail_inequalities.py [--t-max T] [--s-max S]
"""
import argparse
import json
import sys

from bisectlab import tails


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--t-max", type=int, default=12)
    parser.add_argument("--s-max", type=int, default=24)
    parser.add_argument("--a-max", type=int, default=24)
    args = parser.parse_args()

    reports = [
        tails.verify_tail_difference_identity(args.a_max, args.a_max),
        tails.verify_diagonal_four_term(args.t_max, args.s_max),
        tails.verify_shifted_four_term(args.t_max, args.s_max),
        tails.verify_eight_term_grid(args.t_max, args.s_max),
        tails.verify_vandermonde(30),
    ]
    for report in reports:
        data = report.to_json()
        print(json.dumps(data))
        if report.violations:
            consistent = [
                v
                for v in report.violations
                if isinstance(v.point[-3], int)
                and (v.point[-2] - v.point[-3]) % 2 == 0
                and (v.point[-1] - v.point[-3]) % 2 == 0
            ]
            print(
                f"# {report.name}: {len(report.violations)} counterexamples, "
                f"{len(consistent)} of them parity-consistent",
                file=sys.stderr,
            )
    return 0 if all(r.ok for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())

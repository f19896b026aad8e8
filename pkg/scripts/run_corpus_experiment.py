#!/usr/bin/env python3
"""Run the standing corpus experiment and print the CSV summary.

Usage: python scripts/run_corpus_experiment.py [--seed S] [--restarts R]
                                               [--json out.json]
"""
import argparse
import json
import sys

from bisectlab.experiment import (
    ExperimentConfig,
    default_corpus_specs,
    report_to_csv,
    run_experiment,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--restarts", type=int, default=200)
    parser.add_argument("--qpm-restarts", type=int, default=16)
    parser.add_argument("--json", help="also write the full JSON report here")
    args = parser.parse_args()

    cfg = ExperimentConfig(
        corpus=default_corpus_specs(),
        seed=args.seed,
        restarts=args.restarts,
        qpm_restarts=args.qpm_restarts,
    )
    report = run_experiment(cfg)
    sys.stdout.write(report_to_csv(report))
    summary = report["summary"]
    print(
        f"# {summary['passed']}/{summary['total'] - summary['skipped']} passed, "
        f"{summary['skipped']} skipped",
        file=sys.stderr,
    )
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2)
    return 0 if report["ok"] else 1


if __name__ == "__main__":
    sys.exit(main())

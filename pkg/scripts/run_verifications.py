#!/usr/bin/env python3
"""Run every verification campaign at its full supported scale.

Exits nonzero if any campaign reports a mismatch, so this doubles as a
one-shot regression check in CI or after local changes.
"""

import argparse
import sys

from hpindex import verify_hnw, verify_trees, verify_xiongzong


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trees-max-n", type=int, default=11,
                        help="largest tree order for the formula check")
    parser.add_argument("--graphs-max-n", type=int, default=5,
                        help="largest order for the exhaustive trail checks")
    args = parser.parse_args()

    mismatches = 0
    for report in (
        verify_trees(args.trees_max_n),
        verify_xiongzong(args.graphs_max_n),
        verify_hnw(args.graphs_max_n),
    ):
        counts = report.counts
        print(f"{report.campaign}: {report.instances} instances, "
              f"agree {counts['agree']}, mismatch {counts['mismatch']}, "
              f"capped {counts['capped']} ({report.wall_clock_s:.1f}s)")
        for w in report.witnesses:
            print(f"  MISMATCH {w['family_tag']}: {w}")
        mismatches += counts["mismatch"]
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())

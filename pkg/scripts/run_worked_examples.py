#!/usr/bin/env python3
"""Run the shipped scenario files end to end and print the text reports.

Usage:
    python3 scripts/run_worked_examples.py [--certify]
"""

import argparse
import sys
from pathlib import Path

from arthurcalc.scenarios import parse_scenario_text, render_report_text, run_scenario

SCENARIO_DIR = Path(__file__).resolve().parent.parent / "scenarios"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--certify", action="store_true",
                        help="print the per-level eigenvalue multisets too")
    args = parser.parse_args()

    files = sorted(SCENARIO_DIR.glob("*.json"))
    if not files:
        print(f"no scenario files in {SCENARIO_DIR}", file=sys.stderr)
        return 1
    for i, path in enumerate(files):
        if i:
            print()
        print(f"=== {path.name} ===")
        report = run_scenario(parse_scenario_text(path.read_text()))
        sys.stdout.write(render_report_text(report, certify=args.certify))
    return 0


if __name__ == "__main__":
    sys.exit(main())

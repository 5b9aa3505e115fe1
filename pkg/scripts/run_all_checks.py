#!/usr/bin/env python3
"""Run every verification suite and print one line per check.

Exit status is nonzero when any check fails.  Pass --json for the full
report with certificates.
"""

import argparse
import sys

from hairycube.render import dumps
from hairycube.verify import report_lines, reports_payload, run_suite


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--json", action="store_true", help="emit the JSON report")
    parser.add_argument(
        "--n", type=int, default=None, help="cap the power where a suite scales"
    )
    args = parser.parse_args()
    reports = run_suite("all", args.n)
    if args.json:
        sys.stdout.write(dumps(reports_payload(reports)))
    else:
        print("\n".join(report_lines(reports)))
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    raise SystemExit(main())

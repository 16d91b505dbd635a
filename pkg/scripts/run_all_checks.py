"""Run the default verification suite and write a JSON report.

    python3 scripts/run_all_checks.py [--out report.json] [--timing]
"""

import argparse
import json
import sys

from zonotopal.cli import SCHEMA
from zonotopal.verify import DEFAULT_SUITE, run_check


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="-")
    ap.add_argument("--timing", action="store_true")
    args = ap.parse_args()
    reports = []
    for name, params in DEFAULT_SUITE:
        r = run_check(name, **dict(params))
        reports.append(r)
        print(f"{r.status:5} {name:15} {params}  {r.wall_time:6.2f}s", file=sys.stderr)
    payload = {"schema": SCHEMA, "passed": all(r.passed for r in reports),
               "reports": [r.to_json(args.timing) for r in reports]}
    text = json.dumps(payload, sort_keys=True, indent=1)
    if args.out == "-":
        print(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    return 0 if payload["passed"] else 1


if __name__ == "__main__":
    sys.exit(main())

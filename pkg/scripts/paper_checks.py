"""Run every machine-checkable claim and write JSON plus a readable report.

    python3 scripts/paper_checks.py [--budget SECONDS] [--out report.json]
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from minkplanar.checks import Budget, run_paper_checks


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--budget", type=float, default=None, help="seconds; omit for unlimited")
    ap.add_argument("--random-drawings", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default="report.json")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(message)s", stream=sys.stderr)
    rep = run_paper_checks(Budget(args.budget, args.random_drawings, args.seed))
    Path(args.out).write_text(rep.dumps() + "\n")
    print(rep.human())
    return rep.exit_code


if __name__ == "__main__":
    sys.exit(main())

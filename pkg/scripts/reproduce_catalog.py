"""Enumerate K3..K6, filter min-1-planar drawings and summarize edge deletion.

    python3 scripts/reproduce_catalog.py [--out results/]
"""

from __future__ import annotations

import argparse
import json
import logging
from pathlib import Path

from minkplanar.checks import catalog, edge_deletion_summary, unique_min1
from minkplanar.enumeration import filter_min_k


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="results", help="output folder")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    summary = {}
    for n in (3, 4, 5, 6):
        for mode in ("weak-iso", "iso"):
            cat = catalog(n, mode)
            summary[f"K{n} {mode}"] = len(cat)
        cat = catalog(n, "weak-iso")
        (out / f"k{n}.json").write_text(json.dumps(cat.to_json(), indent=1) + "\n")
        summary[f"K{n} min-1"] = len(filter_min_k(cat, 1))
    d = unique_min1()
    (out / "k6_min1.json").write_text(json.dumps(d.to_json(), indent=1) + "\n")
    summary["edge deletion"] = edge_deletion_summary()
    (out / "summary.json").write_text(json.dumps(summary, indent=1, sort_keys=True) + "\n")
    for k, v in summary.items():
        print(f"{k:>16}: {v}")


if __name__ == "__main__":
    main()

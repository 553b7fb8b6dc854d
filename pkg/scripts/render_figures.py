"""Render the unique min-1-planar K6, the two edge-deletion classes, one
gadget and a small yes-instance drawing as SVG files.

    python3 scripts/render_figures.py [--out figures/]
"""

from __future__ import annotations

import argparse
from pathlib import Path

from minkplanar.checks import gadget_template_drawing_default, unique_min1
from minkplanar.drawing import delete_edges
from minkplanar.enumeration import crossing_free, delete_edge_classes
from minkplanar.graphcore import ThreePartitionInstance, solve_three_partition
from minkplanar.reduction import build_reduction, build_yes_drawing
from minkplanar.render import RenderSpec, render_svg


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="figures", help="output folder")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    k6 = unique_min1()
    jobs = {"k6_min1.svg": (k6, True)}
    for i, sub in enumerate(delete_edge_classes(k6, crossing_free)):
        jobs[f"k6_minus_edge_{i}.svg"] = (sub, True)
    jobs["gadget.svg"] = (gadget_template_drawing_default(), False)
    inst = ThreePartitionInstance(1, (1, 1, 3))
    art = build_reduction(inst, c_edges=False)
    jobs["yes_n1_without_c_edges.svg"] = (build_yes_drawing(art, solve_three_partition(inst)), False)

    for name, (d, marks) in jobs.items():
        path = render_svg(RenderSpec(d, str(out / name), crossing_marks=marks, size=900))
        print(f"{path}: {d.base.n} vertices, {len(d.crossings)} crossings")


if __name__ == "__main__":
    main()

"""Command-line entry point: ``minkplanar <command> ...``."""

from __future__ import annotations

import json
import logging
import sys
from pathlib import Path
from typing import Any, Optional

import click

from .checks import Budget, run_paper_checks
from .drawing import (
    Drawing,
    crossing_pairs,
    is_k_planar,
    is_min_k_planar,
    is_simple,
    min_k_violations,
    validate_drawing,
)
from .enumeration import BudgetExceeded, DrawingCatalog, enumerate_good_drawings, exact_min_k_decide, filter_min_k
from .gadget import attach_uncrossable_edge, gadget_template_drawing
from .graphcore import Graph, Partition, ThreePartitionInstance, solve_three_partition, validate_three_partition
from .reduction import (
    ExtractionError,
    ReductionArtifact,
    ReductionError,
    build_reduction,
    build_yes_drawing,
    extract_partition,
)
from .render import RenderError, RenderSpec, render_svg


def _load(path: str) -> Any:
    with open(path) as fh:
        return json.load(fh)


def _dump(obj: Any, path: str) -> None:
    Path(path).write_text(json.dumps(obj, indent=1) + "\n")


def _say(ctx: click.Context, human: str, data: dict) -> None:
    if ctx.obj["json"]:
        click.echo(json.dumps(data, sort_keys=True, default=str))
    else:
        click.echo(human)


@click.group()
@click.option("--seed", type=int, default=0, show_default=True, help="Seed for randomized generation.")
@click.option("--threads", type=int, default=1, show_default=True,
              help="Accepted for compatibility; all work runs on one thread.")
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output on stdout.")
@click.option("-v", "--verbose", is_flag=True, help="Log progress to stderr.")
@click.pass_context
def main(ctx: click.Context, seed: int, threads: int, as_json: bool, verbose: bool) -> None:
    """Min-k-planar drawings: catalogs, the 3-Partition reduction, checks."""
    logging.basicConfig(level=logging.INFO if verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    ctx.obj = {"seed": seed, "threads": threads, "json": as_json}


@main.command("enumerate")
@click.option("--n", "n", type=int, required=True, help="Number of vertices (3..7).")
@click.option("--mode", type=click.Choice(["weak-iso", "iso"]), default="weak-iso", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@click.option("--time-budget", type=float, default=None, help="Seconds before giving up.")
@click.pass_context
def enumerate_cmd(ctx, n, mode, out, time_budget):
    """Catalog of good drawings of K_n, one per class."""
    try:
        cat = enumerate_good_drawings(n, mode, time_budget)
    except BudgetExceeded as exc:
        raise click.ClickException(f"{exc} (partial level holds {len(exc.partial)} classes; "
                                   f"nothing written)")
    _dump(cat.to_json(), out)
    _say(ctx, f"K{n}: {len(cat)} classes ({mode}) -> {out}", cat.manifest())


@main.command("filter")
@click.option("--in", "src", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--k", type=int, required=True)
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@click.pass_context
def filter_cmd(ctx, src, k, out):
    """Keep the min-k-planar entries of a catalog."""
    cat = filter_min_k(DrawingCatalog.from_json(_load(src)), k)
    _dump(cat.to_json(), out)
    _say(ctx, f"{len(cat)} min-{k}-planar classes -> {out}", cat.manifest())


@main.command("decide")
@click.option("--graph", "graph_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--k", type=int, required=True)
@click.option("--max-crossings", type=int, default=None)
@click.option("--node-budget", type=int, default=None, help="Maximum configurations to test.")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write the witness drawing.")
@click.pass_context
def decide_cmd(ctx, graph_path, k, max_crossings, node_budget, out):
    """Exact search for a simple min-k-planar drawing of a small graph."""
    g = Graph.from_json(_load(graph_path))
    res = exact_min_k_decide(g, k, max_crossings, node_budget)
    data = {"status": res.status, "tested": res.tested, "crossings_searched": res.crossings_searched}
    if res.drawing is not None:
        data["crossings"] = len(res.drawing.crossings)
        if out:
            _dump(res.drawing.to_json(), out)
    _say(ctx, f"{res.status} ({res.tested} configurations tested)", data)
    if res.status == "budget_exceeded":
        ctx.exit(2)


@main.command("reduce")
@click.option("--instance", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@click.option("--strict", is_flag=True, help="Require T/4 < x < T/2 and distinct values.")
@click.option("--no-c-edges", is_flag=True, help="Omit the cycle through c_1..c_n.")
@click.pass_context
def reduce_cmd(ctx, instance, out, strict, no_c_edges):
    """Build the min-1-planarity instance of a 3-Partition instance."""
    inst = ThreePartitionInstance.from_json(_load(instance))
    try:
        art = build_reduction(inst, c_edges=not no_c_edges, strict=strict)
    except ReductionError as exc:
        raise click.ClickException(str(exc))
    _dump(art.to_json(), out)
    data = {"vertices": art.graph.n, "edges": art.graph.m, "gadgets": len(art.gadgets)}
    _say(ctx, f"{art.graph.n} vertices, {art.graph.m} edges, {len(art.gadgets)} gadgets -> {out}", data)


@main.command("yes-drawing")
@click.option("--instance", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--partition", type=click.Path(exists=True, dir_okay=False), default=None,
              help="Partition JSON; solved by exhaustive search when omitted.")
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@click.option("--strict", is_flag=True)
@click.option("--no-c-edges", is_flag=True, help="Omit the cycle through c_1..c_n.")
@click.pass_context
def yes_drawing_cmd(ctx, instance, partition, out, strict, no_c_edges):
    """Explicit drawing of the reduction graph for a valid partition."""
    inst = ThreePartitionInstance.from_json(_load(instance))
    p = Partition.from_json(_load(partition)) if partition else solve_three_partition(inst)
    if p is None:
        raise click.ClickException("the instance has no partition")
    try:
        art = build_reduction(inst, c_edges=not no_c_edges, strict=strict)
        d = build_yes_drawing(art, p)
    except ReductionError as exc:
        raise click.ClickException(str(exc))
    _dump(d.to_json(), out)
    viol = min_k_violations(d, 1)
    data = {"vertices": d.base.n, "crossings": len(d.crossings), "simple": is_simple(d),
            "min1": not viol, "min1_violations": len(viol)}
    _say(ctx, f"{d.base.n} vertices, {len(d.crossings)} crossings, simple={data['simple']}, "
              f"min-1-planar={data['min1']} -> {out}", data)


@main.command("extract")
@click.option("--artifact", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--drawing", "drawing_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.pass_context
def extract_cmd(ctx, artifact, drawing_path, out):
    """Read the partition off a drawing of the reduction graph."""
    art = ReductionArtifact.from_json(_load(artifact))
    d = Drawing.from_json(_load(drawing_path))
    try:
        p = extract_partition(art, d)
    except ExtractionError as exc:
        raise click.ClickException(f"{type(exc).__name__}: {exc}")
    if out:
        _dump(p.to_json(), out)
    _say(ctx, " | ".join(",".join(map(str, t)) for t in p.normalized()), p.to_json())


@main.command("gadget")
@click.option("--u", "u", required=True)
@click.option("--v", "v", required=True)
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@click.option("--block-class", type=click.Choice(["0", "1"]), default="0", show_default=True)
@click.pass_context
def gadget_cmd(ctx, u, v, out, block_class):
    """Validated template drawing of one uncrossable edge between u and v."""
    if u == v:
        raise click.ClickException("u and v must differ")
    _, h = attach_uncrossable_edge(Graph((u, v), ()), u, v)
    try:
        d = gadget_template_drawing(h, int(block_class))
    except Exception as exc:
        raise click.ClickException(f"template construction failed: {exc}")
    _dump({"drawing": d.to_json(), "gadget": h.to_json()}, out)
    data = {"vertices": d.base.n, "edges": d.base.m, "crossings": len(d.crossings),
            "max_cr": max(d.cr)}
    _say(ctx, f"{d.base.n} vertices, {d.base.m} edges, {len(d.crossings)} crossings -> {out}", data)


@main.command("solve3p")
@click.option("--instance", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--strict", is_flag=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.pass_context
def solve3p_cmd(ctx, instance, strict, out):
    """Exhaustive 3-Partition solver."""
    inst = ThreePartitionInstance.from_json(_load(instance))
    rep = validate_three_partition(inst, strict)
    p = solve_three_partition(inst) if rep.ok or not strict else None
    data = {"valid": rep.ok, "problems": rep.problems, "partition": p.to_json() if p else None}
    if p and out:
        _dump(p.to_json(), out)
    human = "no" if p is None else "yes: " + " | ".join(",".join(map(str, t)) for t in p.normalized())
    if not rep.ok:
        human = "; ".join(rep.problems) + "\n" + human
    _say(ctx, human, data)


@main.command("check-drawing")
@click.option("--drawing", "drawing_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--k", type=int, default=1, show_default=True)
@click.pass_context
def check_drawing_cmd(ctx, drawing_path, k):
    """Validate a drawing and report its crossing predicates."""
    raw = _load(drawing_path)
    d = Drawing.from_json(raw["drawing"] if "drawing" in raw and "graph" not in raw else raw)
    rep = validate_drawing(d)
    data: dict = {"valid": rep.ok, "problems": rep.problems[:20]}
    if rep.ok:
        data.update({"vertices": d.base.n, "edges": d.base.m, "crossings": len(d.crossings),
                     "max_cr": max(d.cr, default=0), "simple": is_simple(d),
                     f"min_{k}_planar": is_min_k_planar(d, k), f"{k}_planar": is_k_planar(d, k),
                     "crossing_pairs": len(crossing_pairs(d))})
    human = "\n".join(f"{key}: {val}" for key, val in data.items())
    _say(ctx, human, data)
    if not rep.ok:
        ctx.exit(1)


@main.command("render")
@click.option("--drawing", "drawing_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@click.option("--outer-face", type=int, default=None, help="Face index; default is the largest face.")
@click.option("--crossing-marks", is_flag=True)
@click.option("--size", type=int, default=800, show_default=True)
@click.pass_context
def render_cmd(ctx, drawing_path, out, outer_face, crossing_marks, size):
    """Schematic straight-line SVG of a drawing."""
    raw = _load(drawing_path)
    d = Drawing.from_json(raw["drawing"] if "drawing" in raw and "graph" not in raw else raw)
    try:
        render_svg(RenderSpec(d, out, outer_face, crossing_marks=crossing_marks, size=size))
    except RenderError as exc:
        raise click.ClickException(str(exc))
    _say(ctx, f"-> {out}", {"out": out})


@main.command("paper-checks")
@click.option("--budget", type=float, default=None, help="Total seconds; 0 skips every check.")
@click.option("--random-drawings", type=int, default=1000, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write the JSON report.")
@click.option("--no-timings", is_flag=True, help="Leave wall-clock times out of the JSON report.")
@click.pass_context
def paper_checks_cmd(ctx, budget, random_drawings, out, no_timings):
    """Run every computer-checkable claim and report pass/fail/skipped."""
    rep = run_paper_checks(Budget(budget, random_drawings, ctx.obj["seed"]))
    if out:
        Path(out).write_text(rep.dumps(timings=not no_timings) + "\n")
    if ctx.obj["json"]:
        click.echo(rep.dumps(timings=not no_timings))
    else:
        click.echo(rep.human())
    ctx.exit(rep.exit_code)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

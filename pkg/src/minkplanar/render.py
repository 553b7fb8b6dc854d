"""Schematic SVG rendering of a drawing's planarization.

The layout is a barycentric (Tutte) embedding: the outer face is pinned to
a regular polygon and every other node sits at the average of its
neighbours. Each inner face first gets a hidden centre node joined to its
corners, which keeps degree-two nodes off their neighbours' segments.
"""

from __future__ import annotations

import math
import os
import tempfile
from dataclasses import dataclass, field
from typing import Mapping, Optional

import numpy as np

from .drawing import Drawing, faces, validate_drawing

DEFAULT_ROLE_COLORS = {
    "default": "#222222",
    "GadgetInternal": "#9a9a9a",
    "WireMid": "#4c8bd6",
    "UVPathMid": "#d68a4c",
    "SUMid": "#2f9e44",
    "DPathMid": "#ae3ec9",
}


class RenderError(ValueError):
    pass


@dataclass
class RenderSpec:
    drawing: Drawing
    out: str
    outer_face: Optional[int] = None  # index into faces(drawing); None picks the largest
    role_colors: Mapping[str, str] = field(default_factory=lambda: dict(DEFAULT_ROLE_COLORS))
    crossing_marks: bool = False
    labels: bool = True
    size: int = 800


@dataclass
class Layout:
    positions: dict[str, tuple[float, float]]
    outer_face: int


def choose_outer_face(d: Drawing, index: Optional[int] = None) -> int:
    fs = faces(d)
    if not fs:
        raise RenderError("drawing has no faces")
    if index is None:
        # largest face; ties go to the lowest index
        return max(range(len(fs)), key=lambda i: (len(fs[i]), -i))
    if not 0 <= index < len(fs):
        raise RenderError(f"outer face {index} does not exist (drawing has {len(fs)} faces)")
    return index


def tutte_layout(d: Drawing, outer: Optional[int] = None, tol: float = 1e-12) -> Layout:
    rep = validate_drawing(d)
    if not rep.ok:
        raise RenderError("cannot lay out an invalid drawing: " + "; ".join(rep.problems[:3]))
    fs = faces(d)
    k = choose_outer_face(d, outer)
    ring: list[str] = []
    for dart in fs[k]:
        if dart.tail not in ring:
            ring.append(dart.tail)
    nodes = sorted({x for p in d.edge_paths for x in p})
    if len(nodes) == 1:
        return Layout({nodes[0]: (0.0, 0.0)}, k)
    if len(ring) < 3:
        raise RenderError(f"outer face {k} has only {len(ring)} distinct corners")
    # stellate the inner faces
    links: list[tuple[str, str]] = []
    for p in d.edge_paths:
        links.extend(zip(p, p[1:]))
    for i, f in enumerate(fs):
        if i != k:
            centre = f"\x00face{i}"
            nodes.append(centre)
            links.extend((centre, dart.tail) for dart in f)
    idx = {x: i for i, x in enumerate(nodes)}
    pos = np.zeros((len(nodes), 2))
    fixed = np.zeros(len(nodes), bool)
    for j, x in enumerate(ring):
        ang = 2 * math.pi * j / len(ring) + math.pi / 2
        pos[idx[x]] = (math.cos(ang), math.sin(ang))
        fixed[idx[x]] = True
    a = np.array([idx[x] for x, _ in links])
    b = np.array([idx[y] for _, y in links])
    deg = np.bincount(np.concatenate([a, b]), minlength=len(nodes)).astype(float)
    free = ~fixed

    def lap(z: np.ndarray) -> np.ndarray:
        # Laplacian restricted to free nodes (fixed entries of z are zero)
        out = deg * z
        np.subtract.at(out, a, z[b])
        np.subtract.at(out, b, z[a])
        out[fixed] = 0.0
        return out

    for axis in range(2):
        known = np.where(fixed, pos[:, axis], 0.0)
        rhs = -lap_full(known, a, b, deg)
        rhs[fixed] = 0.0
        z = np.zeros(len(nodes))
        r = rhs - lap(z)
        p = r.copy()
        rs = r @ r
        for _ in range(10 * len(nodes) + 100):
            if rs <= tol:
                break
            q = lap(p)
            alpha = rs / (p @ q)
            z += alpha * p
            r -= alpha * q
            new = r @ r
            p = r + (new / rs) * p
            rs = new
        pos[free, axis] = z[free]
    out = {x: (float(pos[idx[x], 0]), float(pos[idx[x], 1])) for x in nodes if not x.startswith("\x00")}
    _check_degenerate(d, out)
    return Layout(out, k)


def lap_full(z: np.ndarray, a: np.ndarray, b: np.ndarray, deg: np.ndarray) -> np.ndarray:
    out = deg * z
    np.subtract.at(out, a, z[b])
    np.subtract.at(out, b, z[a])
    return out


def _check_degenerate(d: Drawing, pos: Mapping[str, tuple[float, float]], eps: float = 1e-9) -> None:
    pts = np.array(list(pos.values()))
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    srt = pts[order]
    gaps = np.hypot(*(srt[1:] - srt[:-1]).T) if len(srt) > 1 else np.array([1.0])
    if gaps.size and gaps.min() < eps:
        raise RenderError("layout is degenerate: two nodes coincide")
    segs = [(x, y) for p in d.edge_paths for x, y in zip(p, p[1:])]
    if len(segs) > 3000:
        return  # pairwise test too costly; coincidence test above still applies
    P = np.array([pos[x] for x, _ in segs])
    Q = np.array([pos[y] for _, y in segs])
    ends = [{x, y} for x, y in segs]

    def orient(p, q, r):
        return (q[..., 0] - p[..., 0]) * (r[..., 1] - p[..., 1]) - (q[..., 1] - p[..., 1]) * (r[..., 0] - p[..., 0])

    for i in range(len(segs)):
        o1 = orient(P[i], Q[i], P[i + 1:])
        o2 = orient(P[i], Q[i], Q[i + 1:])
        o3 = orient(P[i + 1:], Q[i + 1:], P[i])
        o4 = orient(P[i + 1:], Q[i + 1:], Q[i])
        hit = (o1 * o2 < -eps) & (o3 * o4 < -eps)
        for j in np.nonzero(hit)[0]:
            if not ends[i] & ends[i + 1 + j]:
                raise RenderError("layout is degenerate: two segments cross")


def _edge_color(d: Drawing, e: int, colors: Mapping[str, str]) -> str:
    labels = d.base.labels
    roles = [labels[v].role for v in d.base.edges[e] if v in labels]
    for r in roles:
        if r in colors and r not in ("S", "T"):
            return colors[r]
    return colors.get("default", "#222222")


def svg_text(spec: RenderSpec) -> str:
    d = spec.drawing
    lay = tutte_layout(d, spec.outer_face)
    S = spec.size
    pad = 30

    def xy(x: str) -> tuple[float, float]:
        px, py = lay.positions[x]
        return pad + (px + 1) / 2 * (S - 2 * pad), pad + (1 - py) / 2 * (S - 2 * pad)

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{S}" height="{S}" '
           f'viewBox="0 0 {S} {S}">',
           f'<rect width="{S}" height="{S}" fill="white"/>']
    for e, p in enumerate(d.edge_paths):
        pts = " ".join(f"{a:.2f},{b:.2f}" for a, b in map(xy, p))
        out.append(f'<polyline class="edge" data-edge="{e}" points="{pts}" fill="none" '
                   f'stroke="{_edge_color(d, e, spec.role_colors)}" stroke-width="1.2"/>')
    if spec.crossing_marks:
        for c in d.crossings:
            a, b = xy(c.id)
            out.append(f'<circle class="crossing" cx="{a:.2f}" cy="{b:.2f}" r="2" fill="red"/>')
    radius = 7 if d.base.n <= 30 else 3
    for v in d.base.vertices:
        if v not in lay.positions:
            continue
        a, b = xy(v)
        out.append(f'<circle class="vertex" cx="{a:.2f}" cy="{b:.2f}" r="{radius}" '
                   f'fill="white" stroke="black"/>')
        if spec.labels and d.base.n <= 60:
            out.append(f'<text x="{a + radius + 1:.2f}" y="{b - radius - 1:.2f}" '
                       f'font-size="11" font-family="sans-serif">{_escape(v)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _escape(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def render_svg(spec: RenderSpec) -> str:
    """Write the SVG to ``spec.out`` and return the path. Nothing is
    written when the layout fails."""
    text = svg_text(spec)
    folder = os.path.dirname(os.path.abspath(spec.out))
    fd, tmp = tempfile.mkstemp(dir=folder, suffix=".svg.tmp")
    with os.fdopen(fd, "w") as fh:
        fh.write(text)
    os.replace(tmp, spec.out)
    return spec.out

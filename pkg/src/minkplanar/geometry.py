"""Exact planarization of straight-line drawings with rational coordinates."""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

Point = tuple[Fraction, Fraction]


class GeometryError(ValueError):
    pass


def _orient(p: Point, q: Point, r: Point) -> Fraction:
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _on_segment(p: Point, q: Point, r: Point) -> bool:
    """``r`` lies on the closed segment ``pq`` (assumes collinearity)."""
    return min(p[0], q[0]) <= r[0] <= max(p[0], q[0]) and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])


def _angle_cmp(a: Point, b: Point) -> int:
    """Counterclockwise order of direction vectors starting at angle 0."""
    ha = 0 if (a[1] > 0 or (a[1] == 0 and a[0] > 0)) else 1
    hb = 0 if (b[1] > 0 or (b[1] == 0 and b[0] > 0)) else 1
    if ha != hb:
        return ha - hb
    c = a[0] * b[1] - a[1] * b[0]
    return -_sign(c)


@dataclass
class Planarized:
    paths: list[list[str]]
    crossings: dict[str, tuple[int, int]]
    crossing_points: dict[str, Point]
    rotation: dict[str, list[tuple[int, int]]] = field(default_factory=dict)


def planarize(points: Mapping[str, Sequence], segments: Sequence[tuple[str, str]],
              prefix: str = "x") -> Planarized:
    """Planarize straight segments between named points.

    Returns per segment the node sequence from its first to its second
    point, the crossing vertices, and at every node the counterclockwise
    list of ``(segment, piece)`` pieces. Degenerate positions (a segment
    through a foreign point, overlapping segments, three segments through
    one crossing) raise :class:`GeometryError`.
    """
    P = {k: (Fraction(v[0]), Fraction(v[1])) for k, v in points.items()}
    if len(set(P.values())) != len(P):
        raise GeometryError("two points share a position")
    segs = [(P[a], P[b]) for a, b in segments]
    for k, (a, b) in enumerate(segments):
        if a == b:
            raise GeometryError(f"segment {k} is degenerate")
    boxes = [(min(p[0], q[0]), max(p[0], q[0]), min(p[1], q[1]), max(p[1], q[1])) for p, q in segs]
    # no segment may pass through a point other than its ends
    for k, (a, b) in enumerate(segments):
        p, q = segs[k]
        x0, x1, y0, y1 = boxes[k]
        for name, r in P.items():
            if name in (a, b) or not (x0 <= r[0] <= x1 and y0 <= r[1] <= y1):
                continue
            if _orient(p, q, r) == 0:
                raise GeometryError(f"segment {a}-{b} passes through point {name}")
    on_seg: list[list[tuple[Fraction, str]]] = [[] for _ in segs]
    crossings: dict[str, tuple[int, int]] = {}
    cpts: dict[str, Point] = {}
    seen_pts: dict[Point, str] = {}
    order = sorted(range(len(segs)), key=lambda k: boxes[k][0])
    for ii, i in enumerate(order):
        p1, p2 = segs[i]
        bi = boxes[i]
        for j in order[ii + 1:]:
            bj = boxes[j]
            if bj[0] > bi[1]:
                break
            if bj[3] < bi[2] or bj[2] > bi[3]:
                continue
            q1, q2 = segs[j]
            shared = set(segments[i]) & set(segments[j])
            o1, o2 = _orient(p1, p2, q1), _orient(p1, p2, q2)
            if shared:
                if o1 == 0 and o2 == 0:
                    # collinear with a common end: overlap unless they leave in opposite directions
                    c = next(iter(shared))
                    oi = p2 if segments[i][0] == c else p1
                    oj = q2 if segments[j][0] == c else q1
                    pc = P[c]
                    dot = (oi[0] - pc[0]) * (oj[0] - pc[0]) + (oi[1] - pc[1]) * (oj[1] - pc[1])
                    if dot > 0 or len(shared) == 2:
                        raise GeometryError(f"segments {segments[i]} and {segments[j]} overlap")
                continue
            o3, o4 = _orient(q1, q2, p1), _orient(q1, q2, p2)
            if o1 == 0 and o2 == 0:
                if _on_segment(p1, p2, q1) or _on_segment(p1, p2, q2) or _on_segment(q1, q2, p1):
                    raise GeometryError(f"segments {segments[i]} and {segments[j]} overlap")
                continue
            if _sign(o1) * _sign(o2) < 0 and _sign(o3) * _sign(o4) < 0:
                den = (p2[0] - p1[0]) * (q2[1] - q1[1]) - (p2[1] - p1[1]) * (q2[0] - q1[0])
                t = ((q1[0] - p1[0]) * (q2[1] - q1[1]) - (q1[1] - p1[1]) * (q2[0] - q1[0])) / den
                u = ((q1[0] - p1[0]) * (p2[1] - p1[1]) - (q1[1] - p1[1]) * (p2[0] - p1[0])) / den
                pt = (p1[0] + t * (p2[0] - p1[0]), p1[1] + t * (p2[1] - p1[1]))
                if pt in seen_pts:
                    raise GeometryError(f"three segments meet at {pt}")
                cid = f"{prefix}{len(crossings)}"
                seen_pts[pt] = cid
                crossings[cid] = (i, j)
                cpts[cid] = pt
                on_seg[i].append((t, cid))
                on_seg[j].append((u, cid))
    pos = dict(P)
    pos.update(cpts)
    paths = []
    incident: dict[str, list[tuple[Point, tuple[int, int]]]] = {}
    for k, (a, b) in enumerate(segments):
        nodes = [a] + [c for _, c in sorted(on_seg[k])] + [b]
        paths.append(nodes)
        for s in range(len(nodes) - 1):
            x, y = nodes[s], nodes[s + 1]
            px, py = pos[x], pos[y]
            incident.setdefault(x, []).append(((py[0] - px[0], py[1] - px[1]), (k, s)))
            incident.setdefault(y, []).append(((px[0] - py[0], px[1] - py[1]), (k, s)))
    key = functools.cmp_to_key(lambda u, v: _angle_cmp(u[0], v[0]))
    rotation = {x: [piece for _, piece in sorted(items, key=key)] for x, items in incident.items()}
    for x in P:
        rotation.setdefault(x, [])
    return Planarized(paths, crossings, cpts, rotation)


def straight_line_drawing(points: Mapping[str, Sequence], edges: Sequence[tuple[str, str]]):
    """Drawing of the graph on ``points`` whose edges are straight segments."""
    from .drawing import CrossingVertex, Drawing, arc_name
    from .graphcore import Graph

    pl = planarize(points, edges, prefix="x")
    g = Graph(tuple(points), tuple(tuple(e) for e in edges))
    crossings = tuple(CrossingVertex(cid, pair) for cid, pair in sorted(pl.crossings.items()))
    rot = {x: tuple(arc_name(k, s) for k, s in r) for x, r in pl.rotation.items()}
    return Drawing(g, crossings, tuple(tuple(p) for p in pl.paths), rot)

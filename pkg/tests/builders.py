"""Small drawings built by hand (from coordinates or explicit routing)."""

from __future__ import annotations

import itertools

from minkplanar.drawing import Drawing
from minkplanar.geometry import straight_line_drawing
from minkplanar.sketch import Sketch

# outer triangle plus two inner points: exactly one pair of segments meets
K5_POINTS = {"1": (0, 0), "2": (10, 0), "3": (5, 10), "4": (4, 3), "5": (6, 3)}
SQUARE = {"1": (0, 0), "2": (4, 0), "3": (4, 4), "4": (0, 4)}


def k5_one_crossing() -> Drawing:
    return straight_line_drawing(K5_POINTS, list(itertools.combinations(K5_POINTS, 2)))


def k4_planar() -> Drawing:
    pts = {"1": (0, 0), "2": (6, 0), "3": (3, 6), "4": (3, 2)}
    return straight_line_drawing(pts, list(itertools.combinations(pts, 2)))


def k4_one_crossing() -> Drawing:
    return straight_line_drawing(SQUARE, list(itertools.combinations(SQUARE, 2)))


def cycle(n: int) -> Drawing:
    import math
    from fractions import Fraction

    pts = {str(i): (Fraction(round(1000 * math.cos(2 * math.pi * i / n))),
                    Fraction(round(1000 * math.sin(2 * math.pi * i / n)))) for i in range(n)}
    return straight_line_drawing(pts, [(str(i), str((i + 1) % n)) for i in range(n)])


def adjacent_crossing() -> Drawing:
    """4-cycle a-b-c-d whose closing edge d-a crosses a-b."""
    d0 = straight_line_drawing({"a": (0, 0), "b": (4, 0), "c": (4, 4), "d": (0, 4)},
                               [("a", "b"), ("b", "c"), ("c", "d")])
    sk = Sketch.from_drawing(d0)
    e = sk.new_edge("d", "a")
    tip = sk.corners_of("d")[0]
    tip = sk.cross(e, tip, [h for h in sk.corner_face(tip) if sk.he_edge[h] == 0][0])
    target = [c for c in sk.face_corners(sk.corner_face(tip)) if c[0] == "a"][0]
    sk.connect(e, tip, target)
    return sk.to_drawing()


def double_crossing() -> Drawing:
    """Path a-b-c plus an edge c-d that crosses a-b twice."""
    d0 = straight_line_drawing({"a": (0, 0), "b": (4, 0), "c": (8, 0), "d": (0, 5)},
                               [("a", "b"), ("b", "c")])
    sk = Sketch.from_drawing(d0)
    e = sk.new_edge("c", "d")
    tip = sk.corners_of("c")[0]
    tip = sk.cross(e, tip, [h for h in sk.corner_face(tip) if sk.he_edge[h] == 0][0])
    tip = sk.cross(e, tip, [h for h in sk.corner_face(tip) if sk.he_edge[h] == 0][0])
    sk.connect(e, tip, ("d", None))
    return sk.to_drawing()


def touching(d: Drawing, cid: str) -> Drawing:
    """Same drawing with the rotation at crossing ``cid`` de-alternated."""
    data = d.to_json()
    r = data["rotation"][cid]
    # put the two arcs of one edge next to each other
    by_edge = sorted(r, key=lambda a: int(a.split(":")[0]))
    data["rotation"][cid] = by_edge
    return Drawing.from_json(data)

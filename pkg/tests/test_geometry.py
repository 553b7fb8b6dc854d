from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from minkplanar.drawing import is_simple, validate_drawing
from minkplanar.geometry import GeometryError, planarize, straight_line_drawing


def test_two_diagonals_cross_once():
    pl = planarize({"a": (0, 0), "b": (2, 2), "c": (0, 2), "d": (2, 0)}, [("a", "b"), ("c", "d")])
    assert len(pl.crossings) == 1
    (pt,) = pl.crossing_points.values()
    assert pt == (1, 1)
    assert [len(p) for p in pl.paths] == [3, 3]


@pytest.mark.parametrize("points, segs", [
    ({"a": (0, 0), "b": (2, 0), "c": (1, 0)}, [("a", "b")]),                    # through a point
    ({"a": (0, 0), "b": (3, 0), "c": (1, 0), "d": (4, 0)}, [("a", "b"), ("c", "d")]),  # overlap
    ({"a": (0, 0), "b": (0, 0)}, [("a", "b")]),                                 # shared position
])
def test_degenerate_positions(points, segs):
    with pytest.raises(GeometryError):
        planarize(points, segs)


def test_three_segments_through_one_point():
    pts = {"a": (-1, 0), "b": (1, 0), "c": (0, -1), "d": (0, 1), "e": (-1, -1), "f": (1, 1)}
    with pytest.raises(GeometryError):
        planarize(pts, [("a", "b"), ("c", "d"), ("e", "f")])


coords = st.tuples(st.integers(-50, 50), st.integers(-50, 50))


@given(st.lists(coords, min_size=4, max_size=7, unique=True))
def test_complete_straight_line_drawings_are_good(pts):
    names = {str(i): p for i, p in enumerate(pts)}
    edges = [(a, b) for i, a in enumerate(names) for b in list(names)[i + 1:]]
    try:
        d = straight_line_drawing(names, edges)
    except GeometryError:
        return  # collinear or concurrent positions
    assert validate_drawing(d).ok
    assert is_simple(d)

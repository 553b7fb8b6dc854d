from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from minkplanar.drawing import (
    canonical_key,
    faces,
    induced_subdrawing,
    is_min_k_planar,
    is_simple,
    validate_drawing,
)
from minkplanar.gadget import (
    GADGET_EDGES,
    GADGET_VERTICES,
    StaleHandle,
    attach_uncrossable_edge,
    block_classes,
    check_template,
    classify_external,
    gadget_graph,
    gadget_template_drawing,
)
from minkplanar.graphcore import Graph


@pytest.fixture(scope="module")
def handle():
    return attach_uncrossable_edge(Graph(("u", "v"), ()), "u", "v")


def test_counts(handle):
    g, h = handle
    assert (g.n - 2, g.m) == (GADGET_VERTICES, GADGET_EDGES) == (94, 206)
    assert len({frozenset(e) for e in h.block_edges()}) == 18
    assert len(h.blocks) == 3 and all(len(b) == 4 for b in h.blocks)
    assert len(h.u_wires) == len(h.v_wires) == 36
    assert len(h.uv_paths) == 10
    # ten uv-paths: 20 edges outnumber the 18 block edges
    assert 2 * len(h.uv_paths) > len({frozenset(e) for e in h.block_edges()})


def test_three_wires_per_block_vertex(handle):
    g, h = handle
    for x in h.block_vertices:
        for end, mids in (("u", h.u_wires), ("v", h.v_wires)):
            via = [m for m in mids if {frozenset((end, m)), frozenset((m, x))}
                   <= {frozenset(e) for e in g.edges}]
            assert len(via) == 3


def test_rejects_bad_endpoints():
    g = Graph(("u", "v"), ())
    with pytest.raises(ValueError):
        attach_uncrossable_edge(g, "u", "u")
    with pytest.raises((ValueError, KeyError)):
        attach_uncrossable_edge(g, "u", "w")


@given(st.integers(2, 4))
def test_repeated_attachments_are_edge_disjoint(times):
    g = Graph(("u", "v"), ())
    handles = []
    for _ in range(times):
        g, h = attach_uncrossable_edge(g, "u", "v")
        handles.append(h)
    assert g.n == 2 + 94 * times and g.m == 206 * times
    ids = [set(h.edge_ids) for h in handles]
    assert all(not a & b for i, a in enumerate(ids) for b in ids[i + 1:])


def test_classifier():
    g = Graph(("s", "x", "y"), (("s", "x"),))
    g, h = attach_uncrossable_edge(g, "x", "y")
    cls = classify_external(h, g)
    assert all(cls(e) == "gadget-internal" for e in h.edge_ids[:18])
    assert cls(0) == "external"
    assert sorted(cls.external() + list(h.edge_ids)) == list(range(g.m))
    stale = Graph(g.vertices, g.edges[1:] + g.edges[:1])
    with pytest.raises(StaleHandle):
        classify_external(h, stale)


def test_block_classes(unique_k6):
    classes = block_classes()
    assert len(classes) == 2
    for sub, a, b in classes:
        assert sub.base.m == 14 and validate_drawing(sub).ok
        assert all(set(e) != {a, b} for e in sub.base.edges)
        assert len(sub.crossings) == 3 and is_min_k_planar(sub, 1)


@pytest.mark.parametrize("names", [("u", "v"), ("left", "right")])
def test_template(names):
    u, v = names
    g, h = attach_uncrossable_edge(Graph((u, v), ()), u, v)
    d = gadget_template_drawing(h)
    assert d.base.n == 96 and d.base.m == 206
    assert validate_drawing(d).ok and is_simple(d) and is_min_k_planar(d, 1)
    assert any({u, v} <= {x.tail for x in f} for f in faces(d))
    assert check_template(d, h) == []
    keys = {canonical_key(b, "iso", {x: 1, y: 2}) for b, x, y in block_classes()}
    for blk in h.blocks:
        sub = induced_subdrawing(d, (u, v) + blk)
        assert canonical_key(sub, "iso", {u: 1, v: 2}) in keys
    assert d.base.edges == gadget_graph(h).edges

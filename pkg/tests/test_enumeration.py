from __future__ import annotations

import pytest

from builders import k4_one_crossing, k4_planar
from minkplanar.checks import catalog
from minkplanar.drawing import (
    canonical_key,
    induced_subdrawing,
    is_min_k_planar,
    is_simple,
    isomorphic,
    validate_drawing,
)
from minkplanar.enumeration import (
    BudgetExceeded,
    DrawingCatalog,
    crossing_free,
    delete_edge_classes,
    enumerate_good_drawings,
    exact_min_k_decide,
    filter_min_k,
    insert_vertex_extensions,
    planar_triangle,
    single_edge,
)
from minkplanar.graphcore import Graph, complete_graph


def test_extensions_of_an_edge_are_planar_triangles():
    outs = insert_vertex_extensions(single_edge())
    assert outs and all(not d.crossings for d in outs)
    assert len({canonical_key(d) for d in outs}) == 1


def test_extensions_of_triangle_give_both_k4_drawings():
    outs = insert_vertex_extensions(planar_triangle())
    keys = {canonical_key(d) for d in outs}
    assert canonical_key(k4_planar()) in keys
    assert canonical_key(k4_one_crossing()) in keys
    assert all(validate_drawing(d).ok and is_simple(d) for d in outs)


def test_extensions_reject_non_simple_input():
    from builders import double_crossing

    with pytest.raises(ValueError):
        insert_vertex_extensions(double_crossing())


@pytest.mark.parametrize("n, count", [(3, 1), (4, 2), (5, 5)])
def test_small_catalog_counts(n, count):
    for mode in ("iso", "weak-iso"):
        assert len(catalog(n, mode)) == count


def test_catalog_is_deterministic():
    a = enumerate_good_drawings(5, "iso")
    b = enumerate_good_drawings(5, "iso")
    assert a.keys() == b.keys()
    assert a.manifest() == b.manifest()


@pytest.mark.parametrize("n", [5, 6])
def test_level_consistency(n):
    lower = {canonical_key(d) for d in catalog(n - 1, "iso")}
    upper = catalog(n, "iso" if n == 5 else "weak-iso")
    for d in upper:
        for v in d.base.vertices:
            sub = induced_subdrawing(d, [x for x in d.base.vertices if x != v])
            assert canonical_key(sub) in lower


def test_catalog_entries_are_good(k6_weak):
    assert len(k6_weak) == 102
    for d in k6_weak:
        assert validate_drawing(d).ok and is_simple(d)


def test_filter(k6_weak):
    assert len(filter_min_k(k6_weak, 0)) == 0
    ones = filter_min_k(k6_weak, 1)
    assert len(ones) == 1
    for d in ones:
        for c in d.crossings:
            assert min(d.cr[c.pair[0]], d.cr[c.pair[1]]) <= 1
    big = max(max(d.cr) for d in k6_weak)
    assert len(filter_min_k(k6_weak, big)) == 102


def test_delete_edge_classes(unique_k6):
    assert len(delete_edge_classes(k4_planar(), lambda d, e: True)) == 1
    assert len(delete_edge_classes(unique_k6, lambda d, e: False)) == 0
    assert len(delete_edge_classes(unique_k6, crossing_free)) == 2


def test_catalog_json_round_trip():
    cat = catalog(5, "weak-iso")
    data = cat.to_json()
    assert data["manifest"]["count"] == 5 and len(data["manifest"]["keys"]) == 5
    assert all(len(k) == 64 for k in data["manifest"]["keys"])
    back = DrawingCatalog.from_json(data)
    assert back.keys() == cat.keys()
    data["manifest"]["count"] = 6
    with pytest.raises(ValueError):
        DrawingCatalog.from_json(data)


def test_budget_is_explicit():
    with pytest.raises(BudgetExceeded) as info:
        enumerate_good_drawings(6, "weak-iso", time_budget=0.0)
    assert info.value.partial is not None


def test_decide_examples(unique_k6):
    path = Graph(("a", "b", "c"), (("a", "b"), ("b", "c")))
    res = exact_min_k_decide(path, 0)
    assert res.status == "yes" and not res.drawing.crossings
    res = exact_min_k_decide(complete_graph(5), 1)
    assert res.status == "yes" and len(res.drawing.crossings) == 1
    assert exact_min_k_decide(complete_graph(5), 0).status == "no"
    res = exact_min_k_decide(complete_graph(6), 1)
    assert res.status == "yes" and isomorphic(res.drawing, unique_k6)
    assert validate_drawing(res.drawing).ok and is_min_k_planar(res.drawing, 1)


def test_decide_budgets():
    assert exact_min_k_decide(complete_graph(6), 1, node_budget=1).status == "budget_exceeded"
    assert exact_min_k_decide(complete_graph(5), 1, max_crossings=0).status == "budget_exceeded"
    with pytest.raises(ValueError):
        exact_min_k_decide(Graph(("a", "b"), ()), 1)


def test_weak_class_holds_one_iso_class(unique_k6):
    target = canonical_key(unique_k6, "weak-iso")
    hits = [d for d in catalog(6, "iso") if canonical_key(d, "weak-iso") == target]
    assert len(hits) == 1 and isomorphic(hits[0], unique_k6)

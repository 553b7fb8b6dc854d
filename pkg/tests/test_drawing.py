from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from builders import (
    adjacent_crossing,
    cycle,
    double_crossing,
    k4_one_crossing,
    k4_planar,
    k5_one_crossing,
    touching,
)
from minkplanar.drawing import (
    Drawing,
    DrawingError,
    canonical_key,
    crossing_pairs,
    crossings_of_edge,
    delete_edges,
    faces,
    induced_subdrawing,
    is_k_planar,
    is_min_k_planar,
    is_simple,
    isomorphic,
    remove_crossing,
    validate_drawing,
    weakly_isomorphic,
)
from minkplanar.perturb import random_relabel


def euler(d: Drawing) -> int:
    V = len({x for p in d.edge_paths for x in p})
    E = sum(len(p) - 1 for p in d.edge_paths)
    return V - E + len(faces(d))


def test_validate_examples():
    assert validate_drawing(k4_planar()).ok
    d = k5_one_crossing()
    assert validate_drawing(d).ok
    # 5 vertices + 1 crossing, 10 edges with two of them split
    assert len({x for p in d.edge_paths for x in p}) == 6
    assert sum(len(p) - 1 for p in d.edge_paths) == 12
    bad = validate_drawing(touching(d, d.crossings[0].id))
    assert not bad.ok
    assert any("touching, not crossing" in p for p in bad.problems)


def test_validate_reports_malformed_input():
    data = k4_one_crossing().to_json()
    data["rotation"]["1"] = data["rotation"]["1"][:-1]
    assert not validate_drawing(Drawing.from_json(data)).ok
    data = k4_one_crossing().to_json()
    data["edge_paths"]["0"] = ["2", "1"]
    assert not validate_drawing(Drawing.from_json(data)).ok


def test_crossing_counts():
    assert all(crossings_of_edge(k4_planar(), e) == 0 for e in range(6))
    d = k5_one_crossing()
    assert sorted(d.cr) == [0] * 8 + [1, 1]
    assert len(crossing_pairs(d)) == 1
    assert not crossing_pairs(k4_planar())
    with pytest.raises((IndexError, KeyError, ValueError)):
        crossings_of_edge(d, 99)


def test_unique_k6_counts(unique_k6):
    assert len(crossing_pairs(unique_k6)) == 3
    assert all(crossings_of_edge(unique_k6, e) <= 1 for e in range(15))
    assert is_k_planar(unique_k6, 1) and is_min_k_planar(unique_k6, 1)


def test_simplicity():
    assert is_simple(k4_planar())
    assert is_simple(k5_one_crossing())
    adj = adjacent_crossing()
    assert validate_drawing(adj).ok and not is_simple(adj)
    twice = double_crossing()
    assert validate_drawing(twice).ok and not is_simple(twice)
    assert list(crossing_pairs(twice).values()) == [2]


def test_min_k_definitions():
    twice = double_crossing()
    # both edges carry two crossings
    assert not is_min_k_planar(twice, 1)
    assert is_min_k_planar(twice, 2)
    assert not is_k_planar(twice, 1)
    assert all(is_min_k_planar(k4_planar(), k) for k in range(3))
    assert is_k_planar(k4_planar(), 0)


@pytest.mark.parametrize("make, count", [(k4_planar, 4), (lambda: cycle(5), 2)])
def test_face_counts(make, count):
    assert len(faces(make())) == count


def test_faces_obey_euler():
    for d in (k4_planar(), k4_one_crossing(), k5_one_crossing(), adjacent_crossing(), double_crossing()):
        assert euler(d) == 2


def test_induced_subdrawing(unique_k6):
    d = k5_one_crossing()
    assert induced_subdrawing(d, d.base.vertices).equivalent(d)
    for v in unique_k6.base.vertices:
        sub = induced_subdrawing(unique_k6, [x for x in unique_k6.base.vertices if x != v])
        assert validate_drawing(sub).ok and is_simple(sub) and sub.base.m == 10
    scatter = induced_subdrawing(d, ["1"])
    assert scatter.base.m == 0 and not scatter.crossings


def test_weak_isomorphism_examples():
    d = k5_one_crossing()
    assert weakly_isomorphic(d, d)
    assert weakly_isomorphic(d, d.reflected(), relabel=False)
    assert not weakly_isomorphic(k4_planar(), k4_one_crossing())
    with pytest.raises(DrawingError):
        weakly_isomorphic(double_crossing(), double_crossing())


def test_isomorphism_examples():
    d = k5_one_crossing()
    assert isomorphic(d, d.reflected())
    assert canonical_key(d) == canonical_key(d.reflected())
    assert not isomorphic(k4_planar(), k4_one_crossing())
    for mode in ("iso", "weak-iso"):
        assert canonical_key(k4_planar(), mode) != canonical_key(k4_one_crossing(), mode)


def test_reflection_sensitive_key():
    # the straight-line K5 is symmetric under x -> 10 - x, a mirror map
    d = k5_one_crossing()
    rng = random.Random(3)
    key = canonical_key(d, "iso", reflections=False)
    assert key == canonical_key(d.reflected(), "iso", reflections=False)
    assert key == canonical_key(random_relabel(d, rng), "iso", reflections=False)


def test_orientation_classes_refine_iso_classes():
    from minkplanar.checks import catalog

    ents = catalog(5, "iso").sorted_entries()
    oriented = {canonical_key(x, "iso", reflections=False) for d in ents for x in (d, d.reflected())}
    assert len(oriented) >= len(ents)


def test_json_round_trip_and_rotation_shift():
    d = k5_one_crossing()
    data = d.to_json()
    assert set(data) == {"graph", "crossings", "edge_paths", "rotation"}
    assert Drawing.from_json(data).equivalent(d)
    shifted = {k: v[1:] + v[:1] for k, v in data["rotation"].items()}
    other = Drawing.from_json({**data, "rotation": shifted})
    assert other.equivalent(d) and not other.equivalent(d.reflected())
    assert isomorphic(d, other) and canonical_key(d) == canonical_key(other)


def test_crossing_removal_closure_example(unique_k6):
    for c in unique_k6.crossings:
        r = remove_crossing(unique_k6, c.id)
        assert len(r.crossings) == 2 and is_min_k_planar(r, 1)
        assert sum(r.cr) == 4


def test_delete_edges_keeps_validity(unique_k6):
    free = [e for e in range(15) if unique_k6.cr[e] == 0]
    for e in free:
        sub = delete_edges(unique_k6, [e])
        assert validate_drawing(sub).ok and sub.base.m == 14 and len(sub.crossings) == 3


@given(st.integers(0, 10_000))
def test_isomorphism_survives_relabel_and_reflection(seed):
    rng = random.Random(seed)
    d = rng.choice([k4_planar(), k4_one_crossing(), k5_one_crossing()])
    twin = random_relabel(d, rng)
    if rng.random() < 0.5:
        twin = twin.reflected()
    assert isomorphic(d, twin)
    assert weakly_isomorphic(d, twin)
    assert is_simple(d) == is_simple(twin)


@given(st.integers(0, 10_000))
def test_weak_decision_matches_canonical_keys(seed):
    from minkplanar.checks import catalog

    rng = random.Random(seed)
    ents = catalog(5, "iso").sorted_entries() + catalog(6, "weak-iso").sorted_entries()[:20]
    a, b = rng.choice(ents), rng.choice(ents)
    if a.base.n != b.base.n:
        return
    same = canonical_key(a, "weak-iso") == canonical_key(b, "weak-iso")
    assert weakly_isomorphic(a, random_relabel(b, rng)) == same

from __future__ import annotations

import dataclasses

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minkplanar.drawing import is_min_k_planar, is_simple, min_k_violations, validate_drawing
from minkplanar.graphcore import Partition, ThreePartitionInstance, solve_three_partition
from minkplanar.reduction import (
    AmbiguousPlacement,
    ExternalCrossing,
    ExtractionError,
    ReductionArtifact,
    ReductionError,
    build_reduction,
    build_yes_drawing,
    construction_counts,
    external_gadget_crossings,
    extract_partition,
    reduction_size,
)

SMALL = ThreePartitionInstance(2, (1, 2, 3, 1, 2, 3))
TINY = ThreePartitionInstance(1, (1, 1, 3))


@pytest.fixture(scope="module")
def small():
    art = build_reduction(SMALL, c_edges=False)
    p = solve_three_partition(SMALL)
    return art, p, build_yes_drawing(art, p)


def test_size_formula_examples():
    assert reduction_size(2, 6) == (1740, 3780)
    assert reduction_size(1, 1) == (386, 835)
    with pytest.raises(ValueError):
        reduction_size(0, 3)


@given(st.integers(1, 4), st.integers(1, 10))
def test_size_formula_is_linear_after_gadgets(n, T):
    nv, ne = reduction_size(n, T)
    assert nv - 94 * n * (T + 3) == 2 + 5 * n + 3 * n * T
    assert ne - 206 * n * (T + 3) == 6 * n + 5 * n * T


@settings(max_examples=15)
@given(st.integers(1, 3), st.integers(1, 7))
def test_construction_matches_formula(n, T):
    assert construction_counts(n, T) == reduction_size(n, T)
    assert construction_counts(n, T, c_edges=False) == reduction_size(n, T, c_edges=False)


def test_build_reduction_structure():
    art = build_reduction(SMALL)
    g, n, T = art.graph, 2, 6
    assert (g.n, g.m) == (1740, 3780)
    assert len(art.gadgets) == n * (T + 3) == 18
    for j, x in enumerate(SMALL.X, start=1):
        assert g.degree(f"u{j}") == 1 + x
    ids = [set(h.edge_ids) for h in art.gadgets]
    assert sum(map(len, ids)) == len(set().union(*ids)) == 206 * 18
    # d-chains run from c_i to c_{i+1}
    for i in (1, 2):
        chain = art.wiring.d[i - 1]
        assert len(chain) == T
        assert f"c{i}" in g.edges[chain[0]] and f"c{i % n + 1}" in g.edges[chain[-1]]
    roles = sorted(h.role for h in art.gadgets)
    assert roles.count("s-a(1)") == 1 and sum(r.startswith("d-t") for r in roles) == n * (T - 1)
    assert all(lab.check_range(n, T) for lab in g.labels.values())


def test_build_reduction_errors():
    with pytest.raises(ReductionError):
        build_reduction(ThreePartitionInstance(2, (1, 1, 1, 1, 1, 2)))
    with pytest.raises(ReductionError):
        build_reduction(SMALL, strict=True)


def test_artifact_json_round_trip():
    art = build_reduction(TINY)
    back = ReductionArtifact.from_json(art.to_json())
    assert back.graph == art.graph and back.gadgets == art.gadgets
    assert back.wiring == art.wiring and back.c_edges


def test_yes_drawing_without_c_edges(small):
    art, p, d = small
    assert validate_drawing(d).ok and is_simple(d) and is_min_k_planar(d, 1)
    assert not external_gadget_crossings(art, d)
    assert all(d.cr[e] == 1 for row in art.wiring.d for e in row)
    assert all(d.cr[e] == 6 for e in art.wiring.b)
    assert extract_partition(art, d).same_as(p)


def test_extraction_ignores_orientation(small):
    art, p, d = small
    assert extract_partition(art, d.reflected()).same_as(p)


def test_literal_construction_fails_only_at_c_edges():
    art = build_reduction(TINY)
    p = solve_three_partition(TINY)
    d = build_yes_drawing(art, p)
    assert validate_drawing(d).ok and is_simple(d)
    bad = min_k_violations(d, 1)
    assert bad and all(set(pair) & set(art.wiring.c) for pair in bad)
    assert extract_partition(art, d).same_as(p)


def test_invalid_partition_rejected(small):
    art, _, _ = small
    with pytest.raises(ReductionError):
        build_yes_drawing(art, Partition(((1, 2, 4), (3, 5, 6))))


def test_extraction_rejects_foreign_drawing(small):
    art, _, _ = small
    other = build_reduction(TINY, c_edges=False)
    d = build_yes_drawing(other, solve_three_partition(TINY))
    with pytest.raises(ExtractionError):
        extract_partition(art, d)


def test_extraction_reports_external_crossing(small):
    art, _, d = small
    # claim a crossed s-u edge for the first gadget
    crossed = next(e for e in art.wiring.su if d.cr[e])
    h = art.gadgets[0]
    fake = dataclasses.replace(h, edge_ids=h.edge_ids + (crossed,),
                               edges=h.edges + (art.graph.edges[crossed],))
    tampered = dataclasses.replace(art, gadgets=[fake] + art.gadgets[1:])
    with pytest.raises(ExternalCrossing):
        extract_partition(tampered, d)


def test_extraction_reports_ambiguous_placement(small):
    art, _, d = small
    # swap two uncrossed edges at s between two skeleton gadgets: each gadget
    # then meets s in two separate runs
    at_s = {k: [e for e in h.edge_ids if "s" in art.graph.edges[e] and not d.cr[e]]
            for k, h in enumerate(art.gadgets) if h.role.startswith("s-a")}
    (k1, e1s), (k2, e2s) = list(at_s.items())[:2]
    e1, e2 = e1s[len(e1s) // 2], e2s[len(e2s) // 2]

    def swap(h, old, new):
        ids = tuple(new if e == old else e for e in h.edge_ids)
        return dataclasses.replace(h, edge_ids=ids, edges=tuple(art.graph.edges[e] for e in ids))

    gs = list(art.gadgets)
    gs[k1], gs[k2] = swap(gs[k1], e1, e2), swap(gs[k2], e2, e1)
    with pytest.raises(AmbiguousPlacement):
        extract_partition(dataclasses.replace(art, gadgets=gs), d)

from __future__ import annotations

import itertools

from minkplanar.oracle import (
    has_min_k_drawing,
    independent_pairs,
    min_k_ok,
    realizable_pair_sets,
    weak_classes,
)


def k(n):
    return list(itertools.combinations(range(n), 2))


def test_independent_pairs_of_k4():
    # three perfect matchings of K4
    assert len(independent_pairs(k(4))) == 3


def test_min_k_condition():
    edges = k(5)
    assert min_k_ok(edges, [], 0)
    pairs = independent_pairs(edges)
    e = pairs[0][0]
    touching_e = [p for p in pairs if e in p][:3]
    assert not min_k_ok(edges, touching_e[:2], 0)
    assert min_k_ok(edges, touching_e[:2], 1)


def test_k4_pair_sets():
    sets, undecided = realizable_pair_sets(4)
    # the empty set plus one crossing per perfect matching
    assert undecided == 0 and len(sets) == 4
    assert weak_classes(4, sets) == 2


def test_decisions_on_known_graphs():
    k33 = [(a, b) for a in range(3) for b in range(3, 6)]
    assert not has_min_k_drawing(k33, 0, 0)
    assert has_min_k_drawing(k33, 1, len(k33))
    assert not has_min_k_drawing(k(5), 0, 0)
    assert has_min_k_drawing(k(5), 1, 10)

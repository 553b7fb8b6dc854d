from __future__ import annotations

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from builders import k4_planar, k5_one_crossing
from minkplanar.checks import invariant_failures
from minkplanar.drawing import is_simple, validate_drawing
from minkplanar.perturb import perturb, random_drawings


def test_random_drawings_are_reproducible():
    fams = [[k4_planar(), k5_one_crossing()]]
    a = random_drawings(fams, 20, seed=5)
    b = random_drawings(fams, 20, seed=5)
    assert [x.to_json() for x in a] == [x.to_json() for x in b]
    assert all(validate_drawing(x).ok for x in a)


@settings(max_examples=40)
@given(st.integers(0, 2**32 - 1))
def test_perturbations_keep_drawings_good(seed):
    rng = random.Random(seed)
    d = perturb(rng.choice([k4_planar(), k5_one_crossing()]), rng, 4)
    assert validate_drawing(d).ok and is_simple(d)
    assert invariant_failures(d, rng) == []


@settings(max_examples=10)
@given(st.integers(0, 2**32 - 1))
def test_invariants_on_catalog_perturbations(seed):
    from minkplanar.checks import catalog

    rng = random.Random(seed)
    d = perturb(rng.choice(catalog(6, "weak-iso").sorted_entries()), rng, 3)
    assert invariant_failures(d, rng) == []

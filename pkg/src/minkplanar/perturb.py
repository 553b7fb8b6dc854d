"""Seeded random perturbations of valid drawings (for invariant testing)."""

from __future__ import annotations

import random
from typing import Optional, Sequence

from .drawing import Drawing, delete_edges, validate_drawing
from .sketch import Sketch

OPERATIONS = ("reflect", "relabel", "delete-edge", "add-edge")


def _add_random_edge(d: Drawing, rng: random.Random, max_cross: int = 4) -> Optional[Drawing]:
    """Route one new edge between two non-adjacent vertices by a random
    walk through the faces; it never crosses an edge twice nor an edge
    sharing one of its endpoints."""
    adj = {frozenset(e) for e in d.base.edges}
    vs = [v for v in d.base.vertices if d.rotation.get(v)]
    cand = [(a, b) for i, a in enumerate(vs) for b in vs[i + 1:] if frozenset((a, b)) not in adj]
    if not cand:
        return None
    a, b = rng.choice(cand)
    sk = Sketch.from_drawing(d)
    e = sk.new_edge(a, b)
    tip = rng.choice(sk.corners_of(a))
    crossed: set[int] = set()
    for _ in range(max_cross + 1):
        face = sk.corner_face(tip)
        ends = [c for c in sk.face_corners(face) if c[0] == b]
        darts = [g for g in face
                 if sk.he_edge[g] not in crossed and sk.he_edge[g] != e
                 and not {a, b} & set(sk.edges[sk.he_edge[g]])]
        if ends and (not darts or len(crossed) == max_cross or rng.random() < 0.5):
            sk.connect(e, tip, rng.choice(ends))
            return sk.to_drawing()
        if not darts or len(crossed) == max_cross:
            return None
        g = rng.choice(darts)
        crossed.add(sk.he_edge[g])
        tip = sk.cross(e, tip, g)
    return None


def random_relabel(d: Drawing, rng: random.Random) -> Drawing:
    """Rename the base vertices by a random bijection onto fresh names."""
    vs = list(d.base.vertices)
    names = [f"r{k}" for k in range(len(vs))]
    rng.shuffle(names)
    if set(names) & d.crossing_ids:
        names = [f"{x}'" for x in names]
    return d.relabeled(dict(zip(vs, names)))


def perturb(d: Drawing, rng: random.Random, steps: int = 2) -> Drawing:
    """Apply ``steps`` random operations, keeping the drawing valid."""
    for _ in range(steps):
        op = rng.choice(OPERATIONS)
        if op == "reflect":
            d = d.reflected()
        elif op == "relabel":
            d = random_relabel(d, rng)
        elif op == "delete-edge" and d.base.m > 1:
            cand = delete_edges(d, [rng.randrange(d.base.m)])
            if validate_drawing(cand).ok:
                d = cand
        elif op == "add-edge":
            cand = _add_random_edge(d, rng)
            if cand is not None and validate_drawing(cand).ok:
                d = cand
    return d


def random_drawings(families: Sequence[Sequence[Drawing]], count: int, seed: int = 0) -> list[Drawing]:
    """``count`` valid drawings; each picks a family, then a source in it,
    then applies one to four random operations."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        d = perturb(rng.choice(rng.choice(families)), rng, rng.randint(1, 4))
        if validate_drawing(d).ok:
            out.append(d)
    return out

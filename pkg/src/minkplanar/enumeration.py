"""Good drawings of small complete graphs, min-k filtering, and an exact
min-k-planarity decider for tiny graphs."""

from __future__ import annotations

import itertools
import logging
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

import networkx as nx

from .drawing import (
    CrossingVertex,
    Drawing,
    arc_name,
    canonical_key,
    delete_edges,
    is_min_k_planar,
    is_simple,
    remove_crossing,
    validate_drawing,
)
from .graphcore import Graph, complete_graph
from .sketch import Sketch

log = logging.getLogger(__name__)

MODES = ("iso", "weak-iso")


class BudgetExceeded(RuntimeError):
    """Raised when a search stops early; ``partial`` holds what was found."""

    def __init__(self, message: str, partial=None) -> None:
        super().__init__(message)
        self.partial = partial


@dataclass
class DrawingCatalog:
    n: int
    mode: str
    entries: dict[bytes, Drawing] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Drawing]:
        return iter(self.entries.values())

    def add(self, d: Drawing, key: Optional[bytes] = None) -> bool:
        """Insert-if-absent; returns True when ``d`` opened a new class."""
        key = key if key is not None else canonical_key(d, self.mode)
        if key in self.entries:
            return False
        self.entries[key] = d
        return True

    def keys(self) -> list[bytes]:
        return sorted(self.entries)

    def sorted_entries(self) -> list[Drawing]:
        return [self.entries[k] for k in self.keys()]

    def manifest(self) -> dict:
        return {"n": self.n, "mode": self.mode, "count": len(self),
                "keys": [_short_hex(k) for k in self.keys()]}

    def to_json(self) -> dict:
        return {"manifest": self.manifest(),
                "drawings": [d.to_json() for d in self.sorted_entries()]}

    @classmethod
    def from_json(cls, data: dict) -> "DrawingCatalog":
        man = data["manifest"]
        cat = cls(man["n"], man["mode"])
        for item in data["drawings"]:
            cat.add(Drawing.from_json(item))
        if len(cat) != man["count"]:
            raise ValueError(f"manifest says {man['count']} entries, file holds {len(cat)} classes")
        return cat


def _short_hex(key: bytes) -> str:
    import hashlib

    return hashlib.sha256(key).hexdigest()


# --------------------------------------------------------------------------
# vertex insertion
# --------------------------------------------------------------------------


def planar_triangle() -> Drawing:
    g = complete_graph(3)
    # edges 0:(1,2) 1:(1,3) 2:(2,3)
    rot = {"1": ("0:0", "1:0"), "2": ("2:0", "0:0"), "3": ("1:0", "2:0")}
    return Drawing(g, (), (("1", "2"), ("1", "3"), ("2", "3")), rot)


def single_edge() -> Drawing:
    return Drawing(complete_graph(2), (), (("1", "2"),), {"1": ("0:0",), "2": ("0:0",)})


def insert_vertex_extensions(d: Drawing, check: bool = True,
                             budget: Optional[int] = None) -> list[Drawing]:
    """All good drawings of K_n whose restriction to ``1..n-1`` is ``d``.

    The new vertex is placed in every face; its edges to ``1, 2, ...`` are
    routed one after another as walks through the current planarization,
    never crossing an edge adjacent to either endpoint nor any edge twice.
    """
    if check:
        rep = validate_drawing(d)
        if not rep.ok:
            raise ValueError(f"invalid drawing: {rep.problems[:3]}")
        if not is_simple(d):
            raise ValueError("input drawing is not simple")
    m = d.base.n
    if d.base.m != m * (m - 1) // 2:
        raise ValueError("input must be a drawing of a complete graph")
    new = str(m + 1)
    if new in d.base.vertices:
        raise ValueError(f"vertex {new} already present")
    targets = list(d.base.vertices)
    base = Sketch.from_drawing(d)
    out: list[Drawing] = []

    def emit(sk: Sketch) -> None:
        out.append(sk.to_drawing())
        if budget is not None and len(out) > budget:
            raise BudgetExceeded(f"more than {budget} extensions", out)

    def route_next(sk: Sketch, j: int, free_face: Optional[list[int]]) -> None:
        if j == len(targets):
            emit(sk)
            return
        e = sk.new_edge(new, targets[j])
        if free_face is not None:
            grow(sk, e, (new, None), free_face, frozenset(), j)
        else:
            for c in sk.corners_of(new):
                grow(sk, e, c, sk.corner_face(c), frozenset(), j)

    def grow(sk: Sketch, e: int, tip, face: list[int], crossed: frozenset, j: int) -> None:
        w = targets[j]
        for g in face:
            y = sk.he_node[g ^ 1]
            if y == w:
                nxt = sk.copy()
                nxt.connect(e, tip, (w, g ^ 1))
                route_next(nxt, j + 1, None)
        for g in face:
            f = sk.he_edge[g]
            if f == e or f in crossed:
                continue
            a, b = sk.edges[f]
            if new in (a, b) or w in (a, b):
                continue
            nxt = sk.copy()
            t2 = nxt.cross(e, tip, g)
            grow(nxt, e, t2, nxt.corner_face(t2), crossed | {f}, j)

    for face in base.faces():
        sk = base.copy()
        sk.add_vertex(new)
        route_next(sk, 0, face)
    if not base.faces():
        # K1: a single isolated vertex
        sk = base.copy()
        sk.add_vertex(new)
        e = sk.new_edge(new, targets[0])
        sk.connect(e, (new, None), (targets[0], None))
        out.append(sk.to_drawing())
    if check:
        for x in out:
            rep = validate_drawing(x)
            if not rep.ok or not is_simple(x):
                raise AssertionError(f"extension produced a bad drawing: {rep.problems[:3]}")
    return out


def enumerate_good_drawings(n: int, mode: str = "weak-iso", time_budget: Optional[float] = None,
                            check: bool = False) -> DrawingCatalog:
    """Catalog of good drawings of K_n, one representative per class.

    Intermediate levels are always deduplicated by isomorphism (the finer
    relation) so that every class of the final level is reached.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if not 3 <= n <= 7:
        raise ValueError("n must be between 3 and 7")
    t0 = time.monotonic()
    level = DrawingCatalog(3, "iso")
    level.add(planar_triangle())
    for m in range(4, n + 1):
        nxt = DrawingCatalog(m, mode if m == n else "iso")
        for rep in level.sorted_entries():
            for ext in insert_vertex_extensions(rep, check=check):
                nxt.add(ext)
                if time_budget is not None and time.monotonic() - t0 > time_budget:
                    raise BudgetExceeded(f"time budget {time_budget}s exhausted at K{m}", nxt)
        log.info("K%d: %d classes (%s)", m, len(nxt), nxt.mode)
        level = nxt
    if n == 3 and mode != "iso":
        cat = DrawingCatalog(3, mode)
        cat.add(planar_triangle())
        return cat
    return level


def filter_min_k(cat: DrawingCatalog, k: int) -> DrawingCatalog:
    out = DrawingCatalog(cat.n, cat.mode)
    for key, d in cat.entries.items():
        if is_min_k_planar(d, k):
            out.entries[key] = d
    return out


def delete_edge_classes(d: Drawing, predicate: Callable[[Drawing, int], bool],
                        marks: Optional[Callable[[Drawing, int], dict]] = None) -> DrawingCatalog:
    """Delete each edge accepted by ``predicate`` and group the results by
    isomorphism. ``marks(d, e)`` may distinguish vertices (e.g. the two
    endpoints of the deleted edge)."""
    out = DrawingCatalog(d.base.n, "iso")
    for e in range(d.base.m):
        if not predicate(d, e):
            continue
        sub = delete_edges(d, [e])
        mk = marks(d, e) if marks else None
        out.add(sub, canonical_key(sub, "iso", mk))
    return out


def crossing_free(d: Drawing, e: int) -> bool:
    return d.cr[e] == 0


# --------------------------------------------------------------------------
# exact decider
# --------------------------------------------------------------------------


@dataclass
class DecideResult:
    status: str  # "yes" | "no" | "budget_exceeded"
    drawing: Optional[Drawing] = None
    tested: int = 0
    crossings_searched: int = -1

    def __bool__(self) -> bool:
        return self.status == "yes"


def independent_pairs(g: Graph) -> list[tuple[int, int]]:
    return [(i, j) for i in range(g.m) for j in range(i + 1, g.m) if not g.adjacent(i, j)]


def configurations(g: Graph, k: int, c: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """Sets of ``c`` independent edge pairs satisfying the min-k condition."""
    pairs = independent_pairs(g)
    cr = [0] * g.m
    chosen: list[tuple[int, int]] = []

    def ok() -> bool:
        return all(min(cr[a], cr[b]) <= k for a, b in chosen)

    def rec(start: int) -> Iterator[tuple[tuple[int, int], ...]]:
        if len(chosen) == c:
            yield tuple(chosen)
            return
        for t in range(start, len(pairs) - (c - len(chosen)) + 1):
            a, b = pairs[t]
            cr[a] += 1
            cr[b] += 1
            chosen.append((a, b))
            if ok():
                yield from rec(t + 1)
            chosen.pop()
            cr[a] -= 1
            cr[b] -= 1

    yield from rec(0)


def _orders(g: Graph, config) -> Iterator[list[list[int]]]:
    """Per edge, every order of its crossings (crossing = index into config)."""
    on: list[list[int]] = [[] for _ in range(g.m)]
    for ci, (a, b) in enumerate(config):
        on[a].append(ci)
        on[b].append(ci)
    choices = [list(itertools.permutations(lst)) if len(lst) >= 2 else [tuple(lst)] for lst in on]
    for combo in itertools.product(*choices):
        yield [list(x) for x in combo]


def _planarization(g: Graph, config, order) -> tuple[nx.Graph, list[tuple[str, ...]]]:
    names = [f"x{ci}" for ci in range(len(config))]
    P = nx.Graph()
    P.add_nodes_from(g.vertices)
    P.add_nodes_from(names)
    paths = []
    for e, (a, b) in enumerate(g.edges):
        path = (a,) + tuple(names[ci] for ci in order[e]) + (b,)
        nx.add_path(P, path)
        paths.append(path)
    return P, paths


def drawing_from_embedding(g: Graph, config, paths, emb: nx.PlanarEmbedding) -> Drawing:
    """Turn a planar embedding of a planarization into a valid drawing,
    uncrossing any touching crossings."""
    arc_at: dict[tuple[str, str], str] = {}
    for e, p in enumerate(paths):
        for s in range(len(p) - 1):
            arc_at[(p[s], p[s + 1])] = arc_name(e, s)
            arc_at[(p[s + 1], p[s])] = arc_name(e, s)
    rot = {}
    for x in emb.nodes:
        nbrs = list(emb.neighbors_cw_order(x))
        rot[x] = tuple(arc_at[(x, y)] for y in reversed(nbrs))
    cross = tuple(CrossingVertex(f"x{ci}", pair) for ci, pair in enumerate(config))
    d = Drawing(g, cross, tuple(paths), rot)
    while True:
        bad = None
        for c in d.crossings:
            es = [int(a.split(":")[0]) for a in d.rotation[c.id]]
            if not (es[0] == es[2] and es[1] == es[3]):
                bad = c.id
                break
        if bad is None:
            return d
        d = remove_crossing(d, bad)


def exact_min_k_decide(g: Graph, k: int, max_crossings: Optional[int] = None,
                       node_budget: Optional[int] = None) -> DecideResult:
    """Decide whether ``g`` has a simple min-k-planar drawing.

    Guesses crossing configurations (independent pairs, each at most once),
    in order of increasing size, then crossing orders along edges with two
    or more crossings, and planarity-tests the planarization.
    """
    if g.multi or not g.is_connected():
        raise ValueError("exact_min_k_decide needs a simple connected graph")
    bound = k * g.m
    limit = bound if max_crossings is None else min(max_crossings, bound)
    tested = 0
    for c in range(limit + 1):
        # planarization must satisfy |E'| <= 3|V'| - 6
        V, E = g.n + c, g.m + 2 * c
        if V >= 3 and E > 3 * V - 6:
            continue
        for config in configurations(g, k, c):
            for order in _orders(g, config):
                tested += 1
                if node_budget is not None and tested > node_budget:
                    return DecideResult("budget_exceeded", tested=tested, crossings_searched=c - 1)
                P, paths = _planarization(g, config, order)
                planar, emb = nx.check_planarity(P)
                if planar:
                    d = drawing_from_embedding(g, config, paths, emb)
                    return DecideResult("yes", d, tested, c)
    if limit < bound or k >= 2:
        return DecideResult("budget_exceeded" if limit < bound else "no", tested=tested,
                            crossings_searched=limit)
    return DecideResult("no", tested=tested, crossings_searched=limit)

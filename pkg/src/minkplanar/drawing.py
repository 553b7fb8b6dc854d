"""Combinatorial drawings: planarization + rotation system on the sphere.

A drawing stores, for each base edge (by index), the sequence of
planarization nodes it passes through, and for each node the cyclic order
of incident arcs. Arc ``"e:s"`` is segment ``s`` of edge ``e``, running
from ``edge_paths[e][s]`` to ``edge_paths[e][s + 1]``.

Internally arcs are numbered and split into half-edges ``h = 2 * arc + end``
(``end`` 0 sits at the segment's first node). A dart leaving along ``h``
arrives at ``h ^ 1``; the face successor of ``h`` is the rotation successor
of ``h ^ 1``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Optional, Sequence

from .graphcore import Graph, ValidationReport


class DrawingError(ValueError):
    pass


@dataclass(frozen=True)
class CrossingVertex:
    id: str
    pair: tuple[int, int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "pair", tuple(sorted(self.pair)))


@dataclass(frozen=True)
class Dart:
    tail: str
    arc: str
    head: str


def _cyclic_min(r: Sequence[str]) -> tuple[str, ...]:
    r = tuple(r)
    return min((r[i:] + r[:i] for i in range(len(r))), default=())


def arc_name(e: int, s: int) -> str:
    return f"{e}:{s}"


class _Index:
    """Half-edge view of a drawing; collects structural problems as it goes."""

    def __init__(self, d: "Drawing") -> None:
        self.problems: list[str] = []
        self.arcs: list[tuple[int, int]] = []
        self.arc_of: dict[str, int] = {}
        self.ends: list[tuple[str, str]] = []
        for e, path in enumerate(d.edge_paths):
            for s in range(len(path) - 1):
                self.arc_of[arc_name(e, s)] = len(self.arcs)
                self.arcs.append((e, s))
                self.ends.append((path[s], path[s + 1]))
        self.node_of: list[Optional[str]] = [None] * (2 * len(self.arcs))
        self.rot: dict[str, list[int]] = {}
        self.pos: list[int] = [-1] * (2 * len(self.arcs))
        for x, seq in d.rotation.items():
            hs: list[int] = []
            for name in seq:
                a = self.arc_of.get(name)
                if a is None:
                    self.problems.append(f"rotation at {x} names unknown arc {name}")
                    continue
                p, q = self.ends[a]
                if p == x and q == x:
                    h = 2 * a if self.node_of[2 * a] is None else 2 * a + 1
                elif p == x:
                    h = 2 * a
                elif q == x:
                    h = 2 * a + 1
                else:
                    self.problems.append(f"arc {name} is not incident to {x}")
                    continue
                if self.node_of[h] is not None:
                    self.problems.append(f"arc {name} listed twice at {x}")
                    continue
                self.node_of[h] = x
                self.pos[h] = len(hs)
                hs.append(h)
            self.rot[x] = hs
        for h, x in enumerate(self.node_of):
            if x is None:
                e, s = self.arcs[h >> 1]
                self.problems.append(
                    f"arc {arc_name(e, s)} missing from rotation at {self.ends[h >> 1][h & 1]}")

    @property
    def ok(self) -> bool:
        return not self.problems

    def succ(self, h: int) -> int:
        r = self.rot[self.node_of[h]]
        return r[(self.pos[h] + 1) % len(r)]

    def pred(self, h: int) -> int:
        r = self.rot[self.node_of[h]]
        return r[(self.pos[h] - 1) % len(r)]

    def face_cycles(self) -> list[list[int]]:
        seen = bytearray(len(self.node_of))
        faces = []
        for h0 in range(len(self.node_of)):
            if seen[h0]:
                continue
            cyc = []
            h = h0
            while not seen[h]:
                seen[h] = 1
                cyc.append(h)
                h = self.succ(h ^ 1)
            faces.append(cyc)
        return faces

    def components(self, nodes: Iterable[str]) -> int:
        nodes = list(nodes)
        seen: set[str] = set()
        comps = 0
        for x0 in nodes:
            if x0 in seen:
                continue
            comps += 1
            seen.add(x0)
            stack = [x0]
            while stack:
                x = stack.pop()
                for h in self.rot.get(x, ()):
                    y = self.node_of[h ^ 1]
                    if y is not None and y not in seen:
                        seen.add(y)
                        stack.append(y)
        return comps


@dataclass(frozen=True, eq=False)
class Drawing:
    """A drawing of ``base`` on the sphere, up to isotopy.

    ``edge_paths[e]`` runs from ``base.edges[e][0]`` to ``base.edges[e][1]``.
    Rotations are counterclockwise in one global orientation.
    """

    base: Graph
    crossings: tuple[CrossingVertex, ...]
    edge_paths: tuple[tuple[str, ...], ...]
    rotation: Mapping[str, tuple[str, ...]]
    meta: Mapping = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "crossings", tuple(self.crossings))
        object.__setattr__(self, "edge_paths", tuple(tuple(p) for p in self.edge_paths))
        object.__setattr__(self, "rotation", {x: tuple(r) for x, r in self.rotation.items()})

    # -- derived structure -------------------------------------------------

    @cached_property
    def index(self) -> _Index:
        return _Index(self)

    @cached_property
    def crossing_ids(self) -> frozenset[str]:
        return frozenset(c.id for c in self.crossings)

    @cached_property
    def cr(self) -> tuple[int, ...]:
        """Crossing count of every edge."""
        return tuple(len(p) - 2 for p in self.edge_paths)

    @property
    def nodes(self) -> list[str]:
        return list(self.base.vertices) + [c.id for c in self.crossings]

    def arc_ends(self, arc: str) -> tuple[str, str]:
        e, s = (int(t) for t in arc.split(":"))
        p = self.edge_paths[e]
        return p[s], p[s + 1]

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "graph": self.base.to_json(),
            "crossings": [{"id": c.id, "pair": list(c.pair)} for c in self.crossings],
            "edge_paths": {str(e): list(p) for e, p in enumerate(self.edge_paths)},
            "rotation": {x: list(r) for x, r in self.rotation.items()},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Drawing":
        g = Graph.from_json(data["graph"])
        paths = data["edge_paths"]
        return cls(
            g,
            tuple(CrossingVertex(str(c["id"]), tuple(c["pair"])) for c in data["crossings"]),
            tuple(tuple(paths[str(e)]) for e in range(g.m)),
            {str(x): tuple(r) for x, r in data["rotation"].items()},
        )

    def equivalent(self, other: "Drawing") -> bool:
        """Same data, with rotations compared up to cyclic shift."""
        if (self.base != other.base or self.edge_paths != other.edge_paths
                or set(self.crossings) != set(other.crossings)
                or set(self.rotation) != set(other.rotation)):
            return False
        return all(_cyclic_min(r) == _cyclic_min(other.rotation[x]) for x, r in self.rotation.items())

    # -- transformations ---------------------------------------------------

    def reflected(self) -> "Drawing":
        """Mirror image: every rotation reversed."""
        return Drawing(self.base, self.crossings, self.edge_paths,
                       {x: tuple(reversed(r)) for x, r in self.rotation.items()})

    def relabeled(self, mapping: Mapping[str, str]) -> "Drawing":
        """Rename base vertices (crossing ids unchanged)."""
        f = lambda v: mapping.get(v, v)
        g = Graph(tuple(f(v) for v in self.base.vertices),
                  tuple((f(a), f(b)) for a, b in self.base.edges),
                  {f(v): r for v, r in self.base.labels.items()}, self.base.multi)
        return Drawing(g, self.crossings, tuple(tuple(f(x) for x in p) for p in self.edge_paths),
                       {f(x): r for x, r in self.rotation.items()})


# --------------------------------------------------------------------------
# validation and predicates
# --------------------------------------------------------------------------


def validate_drawing(d: Drawing) -> ValidationReport:
    """Check every structural invariant; report all violations found."""
    problems: list[str] = []
    g = d.base
    vs = set(g.vertices)
    if len(d.edge_paths) != g.m:
        problems.append(f"{len(d.edge_paths)} edge paths for {g.m} edges")
        return ValidationReport(False, problems)
    cids = [c.id for c in d.crossings]
    if len(set(cids)) != len(cids):
        problems.append("duplicate crossing id")
    if vs & set(cids):
        problems.append("crossing ids collide with vertex ids")
    cross = {c.id: c for c in d.crossings}
    seen_on: dict[str, list[int]] = {c: [] for c in cids}
    for e, path in enumerate(d.edge_paths):
        a, b = g.edges[e]
        if len(path) < 2 or path[0] != a or path[-1] != b:
            problems.append(f"malformed edge path for edge {e}: {list(path)}")
            continue
        for x in path[1:-1]:
            if x not in cross:
                problems.append(f"edge {e} passes through non-crossing node {x}")
            else:
                seen_on[x].append(e)
    for c in d.crossings:
        on = seen_on.get(c.id, [])
        if sorted(on) != sorted(c.pair) or len(on) != 2 or on[0] == on[1]:
            problems.append(f"crossing {c.id} lies on edges {on}, declared {list(c.pair)}")
    if problems:
        return ValidationReport(False, problems)
    idx = d.index
    problems.extend(idx.problems)
    extra = set(d.rotation) - vs - set(cids)
    if extra:
        problems.append(f"rotation for unknown nodes {sorted(extra)[:5]}")
    if problems:
        return ValidationReport(False, problems)
    for c in d.crossings:
        hs = idx.rot.get(c.id, [])
        if len(hs) != 4:
            problems.append(f"crossing {c.id} has {len(hs)} incident arcs")
            continue
        es = [idx.arcs[h >> 1][0] for h in hs]
        if not (es[0] == es[2] and es[1] == es[3] and es[0] != es[1]):
            problems.append(f"crossing {c.id}: touching, not crossing (rotation {list(d.rotation[c.id])})")
    nodes = d.nodes
    comps = idx.components(nodes)
    if comps != 1:
        problems.append(f"planarization is disconnected ({comps} components)")
    V, E = len(nodes), len(idx.arcs)
    F = len(idx.face_cycles()) if E else 1
    if comps == 1 and V - E + F != 2:
        problems.append(f"Euler failure: V - E + F = {V} - {E} + {F} = {V - E + F}")
    return ValidationReport(not problems, problems, {"V": V, "E": E, "F": F})


def crossings_of_edge(d: Drawing, e: int) -> int:
    if not 0 <= e < d.base.m:
        raise KeyError(f"unknown edge {e}")
    return len(d.edge_paths[e]) - 2


def crossing_pairs(d: Drawing) -> Counter:
    """Multiset of crossing edge pairs (sorted index tuples)."""
    return Counter(c.pair for c in d.crossings)


def is_simple(d: Drawing) -> bool:
    pairs = crossing_pairs(d)
    if any(k > 1 for k in pairs.values()):
        return False
    return not any(d.base.adjacent(i, j) for i, j in pairs)


def is_min_k_planar(d: Drawing, k: int) -> bool:
    cr = d.cr
    return all(min(cr[i], cr[j]) <= k for i, j in (c.pair for c in d.crossings))


def is_k_planar(d: Drawing, k: int) -> bool:
    return max(d.cr, default=0) <= k


def min_k_violations(d: Drawing, k: int) -> list[tuple[int, int]]:
    cr = d.cr
    return sorted({c.pair for c in d.crossings if min(cr[c.pair[0]], cr[c.pair[1]]) > k})


def faces(d: Drawing) -> list[tuple[Dart, ...]]:
    """Faces as cyclic dart sequences (tail, arc, head)."""
    idx = d.index
    if idx.problems:
        raise DrawingError("; ".join(idx.problems[:3]))
    out = []
    for cyc in idx.face_cycles():
        darts = []
        for h in cyc:
            e, s = idx.arcs[h >> 1]
            darts.append(Dart(idx.node_of[h], arc_name(e, s), idx.node_of[h ^ 1]))
        out.append(tuple(darts))
    if not out and len(d.nodes) == 1:
        out.append(())
    return out


def face_vertices(face: Sequence[Dart]) -> list[str]:
    return [dt.tail for dt in face]


# --------------------------------------------------------------------------
# restructuring
# --------------------------------------------------------------------------


def restrict(d: Drawing, keep_edges: Sequence[int], keep_vertices: Iterable[str],
             drop_crossings: Iterable[str] = ()) -> Drawing:
    """Sub-structure keeping the given edges (in order) and vertices.

    Crossings are kept iff both of their edges are kept and they are not
    listed in ``drop_crossings``; the rotation at every kept node is the
    restriction of the old one.
    """
    keep_vertices = [v for v in d.base.vertices if v in set(keep_vertices)]
    drop = set(drop_crossings)
    keep_e = list(keep_edges)
    new_e = {e: i for i, e in enumerate(keep_e)}
    kept_cross = [c for c in d.crossings
                  if c.pair[0] in new_e and c.pair[1] in new_e and c.id not in drop]
    kc = {c.id for c in kept_cross}
    new_paths = []
    newpos: dict[tuple[int, int], int] = {}
    for e in keep_e:
        old = d.edge_paths[e]
        p = []
        for q, x in enumerate(old):
            if q == 0 or q == len(old) - 1 or x in kc:
                newpos[(e, q)] = len(p)
                p.append(x)
        new_paths.append(tuple(p))
    idx = d.index
    rot = {}
    for x in list(keep_vertices) + [c.id for c in kept_cross]:
        seq = []
        for h in idx.rot.get(x, ()):
            e, s = idx.arcs[h >> 1]
            if e not in new_e:
                continue
            q = s + (h & 1)
            p = newpos[(e, q)]
            seq.append(arc_name(new_e[e], p if h & 1 == 0 else p - 1))
        rot[x] = tuple(seq)
    kv = set(keep_vertices)
    g = Graph(tuple(keep_vertices), tuple(d.base.edges[e] for e in keep_e),
              {v: r for v, r in d.base.labels.items() if v in kv}, d.base.multi)
    cross = tuple(type(c)(c.id, (new_e[c.pair[0]], new_e[c.pair[1]])) for c in kept_cross)
    return Drawing(g, cross, tuple(new_paths), rot)


def induced_subdrawing(d: Drawing, S: Iterable[str]) -> Drawing:
    S = set(S)
    missing = S - set(d.base.vertices)
    if missing:
        raise KeyError(f"unknown vertices {sorted(missing)}")
    keep = [e for e, (a, b) in enumerate(d.base.edges) if a in S and b in S]
    return restrict(d, keep, S)


def delete_edges(d: Drawing, edges: Iterable[int]) -> Drawing:
    gone = set(edges)
    return restrict(d, [e for e in range(d.base.m) if e not in gone], d.base.vertices)


def remove_crossing(d: Drawing, cid: str) -> Drawing:
    """Splice crossing ``cid`` out of both edge paths.

    Only crossing counts are meaningful afterwards; the result is in general
    not an embeddable planarization.
    """
    return restrict(d, range(d.base.m), d.base.vertices, drop_crossings=[cid])


# --------------------------------------------------------------------------
# isomorphism
# --------------------------------------------------------------------------


def _map_code(d: Drawing, marks: Optional[Mapping[str, int]] = None,
              reflections: bool = True) -> tuple:
    """Canonical code of the embedded planarization up to sphere homeomorphism.

    Minimum over every root dart at a base vertex and both orientations of a
    BFS encoding. Base vertices are anonymous apart from optional ``marks``.
    With ``reflections`` off only orientation-preserving maps are allowed.
    """
    idx = d.index
    if idx.problems:
        raise DrawingError("; ".join(idx.problems[:3]))
    cset = d.crossing_ids
    marks = marks or {}
    node_of, rot, pos = idx.node_of, idx.rot, idx.pos

    def color(x: str) -> int:
        return 0 if x in cset else 1 + marks.get(x, 0)

    base = list(d.base.vertices)
    if not idx.arcs:
        return ("nodes", tuple(sorted(color(v) for v in base)))
    # cheap root filter: smallest (color, degree) among base vertices with arcs
    cand = [v for v in base if rot.get(v)]
    best_sig = min((color(v), len(rot[v])) for v in cand)
    roots = [h for v in cand if (color(v), len(rot[v])) == best_sig for h in rot[v]]
    best = None
    for orient in ((1, -1) if reflections else (1,)):
        for r in roots:
            num = {node_of[r]: 0}
            start = {node_of[r]: r}
            order = [node_of[r]]
            i = 0
            while i < len(order):
                x = order[i]
                i += 1
                hs, k0 = rot[x], pos[start[x]]
                L = len(hs)
                for j in range(L):
                    h = hs[(k0 + orient * j) % L]
                    y = node_of[h ^ 1]
                    if y not in num:
                        num[y] = len(order)
                        start[y] = h ^ 1
                        order.append(y)
            code = [len(order)]
            for x in order:
                hs, k0 = rot[x], pos[start[x]]
                L = len(hs)
                code.append(color(x))
                code.append(L)
                for j in range(L):
                    h = hs[(k0 + orient * j) % L]
                    t = h ^ 1
                    y = node_of[t]
                    ys = rot[y]
                    code.append(num[y])
                    code.append((orient * (pos[t] - pos[start[y]])) % len(ys))
            code = tuple(code)
            if best is None or code < best:
                best = code
    isolated = sum(1 for v in base if not rot.get(v))
    return (isolated,) + best


def _weak_code(d: Drawing) -> tuple:
    """Canonical form of (base graph, crossing-pair set) under relabeling."""
    g = d.base
    if g.multi:
        raise DrawingError("weak isomorphism needs a simple base graph")
    if not is_simple(d):
        raise DrawingError("weak isomorphism is defined for simple drawings only")
    vs = list(g.vertices)
    vi = {v: i for i, v in enumerate(vs)}
    E = [(vi[a], vi[b]) for a, b in g.edges]
    partners: list[list[int]] = [[] for _ in E]
    for c in d.crossings:
        i, j = c.pair
        partners[i].append(j)
        partners[j].append(i)
    inc: list[list[int]] = [[] for _ in vs]
    for e, (a, b) in enumerate(E):
        inc[a].append(e)
        inc[b].append(e)
    col = [0] * len(vs)
    while True:
        sig = []
        for v in range(len(vs)):
            items = []
            for e in inc[v]:
                a, b = E[e]
                w = b if a == v else a
                items.append((col[w], tuple(sorted(tuple(sorted((col[E[f][0]], col[E[f][1]])))
                                                   for f in partners[e]))))
            sig.append((col[v], tuple(sorted(items))))
        ranks = {s: r for r, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if len(set(new)) == len(set(col)):
            col = new
            break
        col = new
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(col):
        cells.setdefault(c, []).append(v)
    order = [cells[c] for c in sorted(cells)]
    best = None
    pairs = [c.pair for c in d.crossings]
    for choice in itertools.product(*(itertools.permutations(cell) for cell in order)):
        lab = [0] * len(vs)
        k = 0
        for cell in choice:
            for v in cell:
                lab[v] = k
                k += 1
        ekey = [tuple(sorted((lab[a], lab[b]))) for a, b in E]
        es = tuple(sorted(ekey))
        ps = tuple(sorted(tuple(sorted((ekey[i], ekey[j]))) for i, j in pairs))
        code = (es, ps)
        if best is None or code < best:
            best = code
    return (len(vs), tuple(col.count(c) for c in sorted(cells))) + best if best else (len(vs),)


def canonical_key(d: Drawing, mode: str = "iso", marks: Optional[Mapping[str, int]] = None,
                  reflections: bool = True) -> bytes:
    """Byte key; equal keys iff isomorphic (``iso``) or weakly isomorphic
    up to relabeling (``weak-iso``). ``reflections=False`` makes the iso key
    sensitive to orientation."""
    if mode == "iso":
        code = _map_code(d, marks, reflections)
    elif mode == "weak-iso":
        code = _weak_code(d)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return repr(code).encode()


def isomorphic(d1: Drawing, d2: Drawing, marks1: Optional[Mapping[str, int]] = None,
               marks2: Optional[Mapping[str, int]] = None) -> bool:
    if d1.base.n != d2.base.n or d1.base.m != d2.base.m or len(d1.crossings) != len(d2.crossings):
        return False
    return _map_code(d1, marks1) == _map_code(d2, marks2)


def weakly_isomorphic(d1: Drawing, d2: Drawing, relabel: bool = True) -> bool:
    for d in (d1, d2):
        if not is_simple(d):
            raise DrawingError("weak isomorphism is defined for simple drawings only")
    if not relabel:
        if set(d1.base.vertices) != set(d2.base.vertices):
            return False
        e1 = [frozenset(e) for e in d1.base.edges]
        e2 = [frozenset(e) for e in d2.base.edges]
        if sorted(map(sorted, e1)) != sorted(map(sorted, e2)):
            return False
        p1 = {frozenset((e1[i], e1[j])) for i, j in crossing_pairs(d1)}
        p2 = {frozenset((e2[i], e2[j])) for i, j in crossing_pairs(d2)}
        return p1 == p2
    if d1.base.multi or d2.base.multi:
        raise DrawingError("weak isomorphism needs a simple base graph")
    return _find_isomorphism(_incidence_graph(d1), _incidence_graph(d2)) is not None


def _incidence_graph(d: Drawing) -> tuple[list, list[list[int]]]:
    """Labels and adjacency of the vertex/edge/crossing incidence graph.

    An isomorphism of this graph is exactly a base-graph isomorphism that
    carries the crossing-pair set along. Labels hold degrees and crossing
    counts, which any such map preserves.
    """
    g, cr = d.base, d.cr
    vi = {v: i for i, v in enumerate(g.vertices)}
    inc: list[list[int]] = [[] for _ in g.vertices]
    for e, (a, b) in enumerate(g.edges):
        inc[vi[a]].append(cr[e])
        inc[vi[b]].append(cr[e])
    labels: list = [("v", len(x), tuple(sorted(x))) for x in inc]
    adj: list[list[int]] = [[] for _ in g.vertices]
    for e, (a, b) in enumerate(g.edges):
        node = len(labels)
        labels.append(("e", cr[e], tuple(sorted((len(inc[vi[a]]), len(inc[vi[b]]))))))
        adj.append([vi[a], vi[b]])
        adj[vi[a]].append(node)
        adj[vi[b]].append(node)
    first_edge = len(g.vertices)
    for c in d.crossings:
        node = len(labels)
        labels.append(("c",))
        adj.append([first_edge + e for e in c.pair])
        for e in c.pair:
            adj[first_edge + e].append(node)
    return labels, adj


def _refine(cols: list[list], adjs: list[list[list[int]]]) -> list[list[int]]:
    """Joint colour refinement of several graphs (colours stay comparable)."""
    cur = cols
    count = -1
    while True:
        sigs = [[(c[x], tuple(sorted(c[y] for y in a[x]))) for x in range(len(a))]
                for c, a in zip(cur, adjs)]
        ranks = {s: r for r, s in enumerate(sorted({s for sg in sigs for s in sg}))}
        cur = [[ranks[s] for s in sg] for sg in sigs]
        if len(ranks) == count:
            return cur
        count = len(ranks)


def _find_isomorphism(g1, g2) -> Optional[list[int]]:
    """One label-preserving isomorphism ``g1 -> g2`` or ``None``.

    Individualization-refinement: refine both graphs together, then fix one
    node of the smallest non-trivial cell against every candidate in turn.
    """
    (l1, a1), (l2, a2) = g1, g2
    if len(l1) != len(l2) or sorted(map(len, a1)) != sorted(map(len, a2)):
        return None
    ranks = {s: r for r, s in enumerate(sorted(set(l1) | set(l2), key=repr))}
    start = [[ranks[x] for x in l1], [ranks[x] for x in l2]]

    def search(c1: list[int], c2: list[int]) -> Optional[list[int]]:
        c1, c2 = _refine([c1, c2], [a1, a2])
        if Counter(c1) != Counter(c2):
            return None
        cells: dict[int, list[int]] = {}
        for x, c in enumerate(c1):
            cells.setdefault(c, []).append(x)
        open_cells = [cs for cs in cells.values() if len(cs) > 1]
        if not open_cells:
            where = {c: y for y, c in enumerate(c2)}
            m = [where[c] for c in c1]
            ok = all(sorted(m[y] for y in a1[x]) == sorted(a2[m[x]]) for x in range(len(a1)))
            return m if ok else None
        cell = min(open_cells, key=lambda cs: (len(cs), cs[0]))
        x, fresh = cell[0], max(c1) + 1
        for y in (y for y, c in enumerate(c2) if c == c1[x]):
            n1, n2 = list(c1), list(c2)
            n1[x], n2[y] = fresh, fresh
            found = search(n1, n2)
            if found is not None:
                return found
        return None

    return search(*start)


def reindex_edges(d: Drawing, base: Graph, mapping: Sequence[int]) -> Drawing:
    """Re-express ``d`` over ``base`` where old edge ``e`` becomes
    ``mapping[e]``; edges given in the opposite direction are reversed."""
    if sorted(mapping) != list(range(base.m)) or len(mapping) != d.base.m:
        raise ValueError("mapping must be a bijection onto the new edge indices")
    paths: list = [None] * base.m
    arc_map: dict[str, str] = {}
    for e, path in enumerate(d.edge_paths):
        ne = mapping[e]
        a, b = base.edges[ne]
        segs = len(path) - 1
        if (path[0], path[-1]) == (a, b):
            flip = False
        elif (path[-1], path[0]) == (a, b):
            flip = True
        else:
            raise ValueError(f"edge {d.base.edges[e]} does not match {base.edges[ne]}")
        paths[ne] = tuple(reversed(path)) if flip else tuple(path)
        for s in range(segs):
            arc_map[arc_name(e, s)] = arc_name(ne, segs - 1 - s if flip else s)
    rot = {x: tuple(arc_map[a] for a in r) for x, r in d.rotation.items()}
    cross = tuple(CrossingVertex(c.id, (mapping[c.pair[0]], mapping[c.pair[1]])) for c in d.crossings)
    return Drawing(base, cross, tuple(paths), rot, d.meta)

"""The uncrossable-edge gadget: three K4 blocks, spokes, wires and uv-paths."""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .drawing import (
    Drawing,
    canonical_key,
    delete_edges,
    faces,
    induced_subdrawing,
    is_min_k_planar,
    is_simple,
    reindex_edges,
    validate_drawing,
)
from .graphcore import Graph, RoleLabel
from .sketch import Sketch

BLOCKS, BLOCK_SIZE, WIRES_PER_VERTEX, UV_PATHS = 3, 4, 3, 10
GADGET_VERTICES = BLOCKS * BLOCK_SIZE * (1 + 2 * WIRES_PER_VERTEX) + UV_PATHS  # 94
GADGET_EDGES = BLOCKS * 6 + 2 * BLOCKS * BLOCK_SIZE * (1 + 2 * WIRES_PER_VERTEX) + 2 * UV_PATHS  # 206


class TemplateError(RuntimeError):
    """A gadget template failed its own validation."""


class GraphBuilder:
    """Append-only graph under construction."""

    def __init__(self, g: Optional[Graph] = None) -> None:
        self.vertices: list[str] = list(g.vertices) if g else []
        self.edges: list[tuple[str, str]] = list(g.edges) if g else []
        self.labels: dict = dict(g.labels) if g else {}
        self._vset = set(self.vertices)
        self.multi = g.multi if g else False

    def vertex(self, name: str, label: Optional[RoleLabel] = None) -> str:
        if name in self._vset:
            raise ValueError(f"vertex {name} already exists")
        self._vset.add(name)
        self.vertices.append(name)
        if label is not None:
            self.labels[name] = label
        return name

    def edge(self, a: str, b: str) -> int:
        self.edges.append((a, b))
        return len(self.edges) - 1

    def has(self, name: str) -> bool:
        return name in self._vset

    def freeze(self) -> Graph:
        seen, multi = set(), self.multi
        for a, b in self.edges:
            k = frozenset((a, b))
            if a == b or k in seen:
                multi = True
            seen.add(k)
        return Graph(tuple(self.vertices), tuple(self.edges), self.labels, multi)


@dataclass(frozen=True)
class GadgetHandle:
    u: str
    v: str
    prefix: str
    role: str
    blocks: tuple[tuple[str, ...], ...]
    u_wires: tuple[str, ...]
    v_wires: tuple[str, ...]
    uv_paths: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    edge_ids: tuple[int, ...]

    @property
    def block_vertices(self) -> tuple[str, ...]:
        return tuple(x for b in self.blocks for x in b)

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.block_vertices + self.u_wires + self.v_wires + self.uv_paths

    def block_edges(self) -> list[tuple[str, str]]:
        return list(self.edges[:18])

    def to_json(self) -> dict:
        return {"u": self.u, "v": self.v, "role": self.role, "prefix": self.prefix,
                "vertices": list(self.vertices), "edges": list(self.edge_ids)}

    @classmethod
    def from_json(cls, data: dict, g: Graph) -> "GadgetHandle":
        vs = data["vertices"]
        nb = BLOCKS * BLOCK_SIZE
        nw = nb * WIRES_PER_VERTEX
        blocks = tuple(tuple(vs[k * BLOCK_SIZE:(k + 1) * BLOCK_SIZE]) for k in range(BLOCKS))
        ids = tuple(data["edges"])
        return cls(data["u"], data["v"], data.get("prefix", ""), data["role"], blocks,
                   tuple(vs[nb:nb + nw]), tuple(vs[nb + nw:nb + 2 * nw]), tuple(vs[nb + 2 * nw:]),
                   tuple(g.edges[e] for e in ids), ids)


def _attach(b: GraphBuilder, u: str, v: str, prefix: str, role: str) -> GadgetHandle:
    if u == v:
        raise ValueError("an uncrossable edge needs two distinct endpoints")
    for x in (u, v):
        if not b.has(x):
            raise ValueError(f"unknown vertex {x}")
    blk = RoleLabel("GadgetInternal", ("K4",))
    blocks = tuple(tuple(b.vertex(f"{prefix}.H{k}.{i}", blk) for i in range(1, 5)) for k in range(1, 4))
    edges: list[tuple[str, str]] = []
    ids: list[int] = []

    def add(x: str, y: str) -> None:
        ids.append(b.edge(x, y))
        edges.append((x, y))

    for blkv in blocks:
        for i in range(4):
            for j in range(i + 1, 4):
                add(blkv[i], blkv[j])
    wires = {}
    for end, tag in ((u, "wu"), (v, "wv")):
        for blkv in blocks:
            for x in blkv:
                add(end, x)
        mids = []
        for blkv in blocks:
            for x in blkv:
                for r in range(WIRES_PER_VERTEX):
                    m = b.vertex(f"{prefix}.{tag}.{x.rsplit('.', 2)[-2]}.{x.rsplit('.', 1)[-1]}.{r}",
                                 RoleLabel("WireMid"))
                    mids.append(m)
                    add(end, m)
                    add(m, x)
        wires[tag] = tuple(mids)
    uv = []
    for r in range(UV_PATHS):
        m = b.vertex(f"{prefix}.uv.{r}", RoleLabel("UVPathMid"))
        uv.append(m)
        add(u, m)
        add(m, v)
    return GadgetHandle(u, v, prefix, role, blocks, wires["wu"], wires["wv"], tuple(uv),
                        tuple(edges), tuple(ids))


def _fresh_prefix(b: GraphBuilder, u: str, v: str) -> str:
    k = 0
    while b.has(f"g[{u}~{v}]{k}.H1.1"):
        k += 1
    return f"g[{u}~{v}]{k}"


def attach_uncrossable_edge(g: Graph, u: str, v: str, prefix: Optional[str] = None,
                            role: str = "uv") -> tuple[Graph, GadgetHandle]:
    """Add an uncrossable edge between ``u`` and ``v``: 94 new vertices and
    206 new edges."""
    b = GraphBuilder(g)
    h = _attach(b, u, v, prefix or _fresh_prefix(b, u, v), role)
    return b.freeze(), h


def gadget_graph(h: GadgetHandle) -> Graph:
    labels = {}
    return Graph((h.u, h.v) + h.vertices, h.edges, labels)


# --------------------------------------------------------------------------
# classification
# --------------------------------------------------------------------------


class StaleHandle(ValueError):
    pass


@dataclass(frozen=True)
class ExternalEdgeClassifier:
    internal: frozenset[int]
    m: int

    def __call__(self, e: int) -> str:
        if not 0 <= e < self.m:
            raise IndexError(e)
        return "gadget-internal" if e in self.internal else "external"

    def external(self) -> list[int]:
        return [e for e in range(self.m) if e not in self.internal]


def classify_external(h: GadgetHandle, g: Graph) -> ExternalEdgeClassifier:
    for e, pair in zip(h.edge_ids, h.edges):
        if not 0 <= e < g.m or tuple(g.edges[e]) != tuple(pair):
            raise StaleHandle(f"handle edge {pair} is not edge {e} of this graph")
    return ExternalEdgeClassifier(frozenset(h.edge_ids), g.m)


# --------------------------------------------------------------------------
# drawing templates
# --------------------------------------------------------------------------


@functools.lru_cache(maxsize=1)
def unique_min1_k6() -> Drawing:
    """The min-1-planar good drawing of K6, taken from the enumerated catalog."""
    from .enumeration import enumerate_good_drawings, filter_min_k

    cat = filter_min_k(enumerate_good_drawings(6, "weak-iso"), 1)
    if len(cat) != 1:
        raise TemplateError(f"expected one min-1-planar K6 class, found {len(cat)}")
    return next(iter(cat))


@functools.lru_cache(maxsize=1)
def block_classes() -> tuple[tuple[Drawing, str, str], ...]:
    """The isomorphism classes of (K6 drawing minus one crossing-free edge),
    each with the endpoints of the removed edge."""
    d = unique_min1_k6()
    out: dict[bytes, tuple[Drawing, str, str]] = {}
    for e in range(d.base.m):
        if d.cr[e]:
            continue
        sub = delete_edges(d, [e])
        out.setdefault(canonical_key(sub, "iso"), (sub, *d.base.edges[e]))
    return tuple(out[k] for k in sorted(out))


def block_drawing(cls: int, u: str, v: str, names: Sequence[str]) -> Drawing:
    sub, a, b = block_classes()[cls]
    others = [x for x in sub.base.vertices if x not in (a, b)]
    mapping = {a: u, b: v, **dict(zip(others, names))}
    return sub.relabeled(mapping)


def _cofacial_corners(sk: Sketch, x: str, y: str):
    for face in sk.faces():
        cx = cy = None
        for c in sk.face_corners(face):
            if c[0] == x and cx is None:
                cx = c
            elif c[0] == y and cy is None:
                cy = c
        if cx is not None and cy is not None:
            return cx, cy
    return None


def _apply_path2(sk: Sketch, a: str, b: str, mid: str, label, start, darts, split, bpos) -> tuple[int, int]:
    sk.add_vertex(mid, label)
    e1 = sk.new_edge(a, mid)
    tip = start
    for g in darts[:split]:
        tip = sk.cross(e1, tip, g)
    h = sk.connect(e1, tip, (mid, None))
    e2 = sk.new_edge(mid, b)
    tip = (mid, h + 1)
    for g in darts[split:]:
        tip = sk.cross(e2, tip, g)
    sk.connect(e2, tip, (b, sk.rot[b][bpos]))
    return e1, e2


def _path2_ok(sk: Sketch, e1: int, e2: int) -> bool:
    partners: dict[int, list[int]] = {e1: [], e2: []}
    for f1, f2 in sk.crossing_pair.values():
        if f1 in partners:
            partners[f1].append(f2)
        if f2 in partners:
            partners[f2].append(f1)
    for e, fs in partners.items():
        ends = set(sk.edges[e])
        if len(set(fs)) != len(fs):
            return False
        for f in fs:
            if ends & set(sk.edges[f]):
                return False
            if sk.cr[f] > 1 and sk.cr[e] > 1:
                return False
            # f's older partners must still see a light side
            for c, (g1, g2) in sk.crossing_pair.items():
                if f in (g1, g2):
                    o = g2 if g1 == f else g1
                    if min(sk.cr[f], sk.cr[o]) > 1:
                        return False
    return True


def add_path2(sk: Sketch, a: str, b: str, mid: str, label: Optional[RoleLabel] = None,
              max_cross: int = 3) -> Sketch:
    """Add a path a-mid-b keeping the sketch simple and min-1-planar.

    Dual routes are tried in order of increasing length, each with every
    position of the middle vertex. Returns the updated sketch (a copy).
    """
    fid: dict[int, int] = {}
    flist = sk.faces()
    for i, f in enumerate(flist):
        for g in f:
            fid[g] = i
    b_corner: dict[int, int] = {}
    for i, f in enumerate(flist):
        for x, h in sk.face_corners(f):
            if x == b and i not in b_corner:
                b_corner[i] = sk.rot[b].index(h)
    frontier = []
    seen_start = set()
    for i, f in enumerate(flist):
        for c in sk.face_corners(f):
            if c[0] == a and i not in seen_start:
                seen_start.add(i)
                frontier.append((c, i, ()))
    for depth in range(max_cross + 1):
        nxt = []
        for start, face, darts in frontier:
            if face in b_corner:
                for split in range(len(darts) + 1):
                    if any(a in sk.edges[sk.he_edge[g]] for g in darts[:split]) or \
                            any(b in sk.edges[sk.he_edge[g]] for g in darts[split:]):
                        continue
                    trial = sk.copy()
                    e1, e2 = _apply_path2(trial, a, b, mid, label, start, list(darts), split, b_corner[face])
                    if _path2_ok(trial, e1, e2):
                        return trial
            if depth == max_cross:
                continue
            visited = {fid[g] for g in darts} | {frontier_face(start, sk, fid)}
            for g in flist[face]:
                to = fid[g ^ 1]
                if to in visited or to == face:
                    continue
                nxt.append((start, to, darts + (g,)))
        frontier = nxt
    raise TemplateError(f"no admissible route for a path between {a} and {b}")


def frontier_face(corner, sk: Sketch, fid: dict[int, int]) -> int:
    return fid[sk.succ(corner[1])]


WIRE_ORDERS = ("u-first", "v-first", "interleaved")


def _wire_jobs(h: GadgetHandle, order: str) -> list[tuple[str, str, str]]:
    uj = [(h.u, x) for x in h.block_vertices for _ in range(WIRES_PER_VERTEX)]
    vj = [(h.v, x) for x in h.block_vertices for _ in range(WIRES_PER_VERTEX)]
    um = [(a, x, m) for (a, x), m in zip(uj, h.u_wires)]
    vm = [(a, x, m) for (a, x), m in zip(vj, h.v_wires)]
    if order == "u-first":
        return um + vm
    if order == "v-first":
        return vm + um
    return [job for pair in zip(um, vm) for job in pair]


def _build_template(h: GadgetHandle, block_class: int, order: str = "u-first") -> Drawing:
    u, v = h.u, h.v
    sk = Sketch.from_drawing(block_drawing(block_class, u, v, h.blocks[0]))
    for k in (1, 2):
        other = Sketch.from_drawing(block_drawing(block_class, u, v, h.blocks[k]))
        found = _cofacial_corners(sk, u, v)
        theirs = _cofacial_corners(other, u, v)
        if found is None or theirs is None:
            raise TemplateError("block endpoints are not co-facial")
        e = sk.new_edge(u, v)
        sk.connect(e, found[0], found[1])
        sk.substitute(e, other, u, v, theirs[0], theirs[1], lambda x: x)
    for end, x, m in _wire_jobs(h, order):
        sk = add_path2(sk, end, x, m, RoleLabel("WireMid"))
    for m in h.uv_paths:
        sk = add_path2(sk, u, v, m, RoleLabel("UVPathMid"))
    d = sk.to_drawing()
    g = gadget_graph(h)
    pos = {frozenset(p): i for i, p in enumerate(g.edges)}
    return reindex_edges(d, g, [pos[frozenset(p)] for p in d.base.edges])


def check_template(d: Drawing, h: GadgetHandle) -> list[str]:
    """Problems with a gadget drawing; empty when it meets every postcondition."""
    problems = list(validate_drawing(d).problems)
    if problems:
        return problems
    if not is_simple(d):
        problems.append("not simple")
    if not is_min_k_planar(d, 1):
        problems.append("not min-1-planar")
    if not any({h.u, h.v} <= {x.tail for x in f} for f in faces(d)):
        problems.append("u and v share no face")
    blocks = block_classes()
    keys = {canonical_key(b[0], "iso", {b[1]: 1, b[2]: 2}) for b in blocks}
    for blk in h.blocks:
        sub = induced_subdrawing(d, (h.u, h.v) + blk)
        if canonical_key(sub, "iso", {h.u: 1, h.v: 2}) not in keys:
            problems.append(f"block {blk[0]} is not drawn as a K6-minus-edge class")
    return problems


@functools.lru_cache(maxsize=4)
def _canonical(block_class: int) -> tuple[GadgetHandle, Drawing]:
    b = GraphBuilder(Graph(("u", "v"), ()))
    h = _attach(b, "u", "v", "g", "template")
    failures = []
    for order in WIRE_ORDERS:
        try:
            d = _build_template(h, block_class, order)
        except TemplateError as exc:
            failures.append(f"{order}: {exc}")
            continue
        problems = check_template(d, h)
        if not problems:
            return h, d
        failures.append(f"{order}: " + "; ".join(problems[:3]))
    raise TemplateError(f"block class {block_class}: " + " | ".join(failures))


def gadget_template_drawing(h: GadgetHandle, block_class: int = 0) -> Drawing:
    """A simple min-1-planar drawing of the gadget with u and v co-facial.

    Blocks are copies of one K6-minus-edge class; wires and uv-paths are
    routed through the dual with at most three crossings each, so every
    crossing is between two gadget edges.
    """
    ch, d = _canonical(block_class)
    mapping = dict(zip((ch.u, ch.v) + ch.vertices, (h.u, h.v) + h.vertices))
    out = d.relabeled(mapping)
    g = gadget_graph(h)
    pos = {frozenset(p): i for i, p in enumerate(g.edges)}
    return reindex_edges(out, g, [pos[frozenset(p)] for p in out.base.edges])


def template_sketch(h: GadgetHandle, block_class: int = 0):
    """Sketch of the template plus corners of u and v on a common face."""
    sk = Sketch.from_drawing(gadget_template_drawing(h, block_class))
    found = _cofacial_corners(sk, h.u, h.v)
    if found is None:
        raise TemplateError("u and v share no face")
    return sk, found[0], found[1]

"""The 3-Partition reduction, its yes-instance drawing, and partition
extraction from drawings whose uncrossable edges are not crossed externally."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .drawing import (
    CrossingVertex,
    Drawing,
    arc_name,
    faces,
    reindex_edges,
    validate_drawing,
)
from .gadget import (
    GADGET_EDGES,
    GADGET_VERTICES,
    GadgetHandle,
    GraphBuilder,
    _attach,
    template_sketch,
)
from .geometry import planarize
from .graphcore import Graph, Partition, RoleLabel, ThreePartitionInstance, validate_three_partition
from .sketch import Sketch

log = logging.getLogger(__name__)


class ReductionError(ValueError):
    pass


class ExtractionError(ValueError):
    """Base class for extract_partition failures."""


class ExternalCrossing(ExtractionError):
    """A gadget edge crosses an edge outside its own gadget."""


class SkeletonShapeError(ExtractionError):
    """The skeleton is not a cycle of s-t paths bounding n faces."""


class AmbiguousPlacement(ExtractionError):
    """A vertex or face cannot be assigned without guessing."""


def reduction_size(n: int, T: int, c_edges: bool = True) -> tuple[int, int]:
    if n < 1 or T < 1:
        raise ValueError("n and T must be positive")
    gadgets = n * (T + 3)
    nv = 2 + 5 * n + 3 * n * T + GADGET_VERTICES * gadgets
    ne = (6 if c_edges else 5) * n + 5 * n * T + GADGET_EDGES * gadgets
    return nv, ne


@dataclass
class Wiring:
    """Edge indices of the non-gadget structure, 1-based in i and j."""

    su: list[int] = field(default_factory=list)
    a: list[int] = field(default_factory=list)
    b: list[int] = field(default_factory=list)
    c: list[int] = field(default_factory=list)
    d: list[list[int]] = field(default_factory=list)
    d_lens: list[list[tuple[int, int]]] = field(default_factory=list)
    ut: list[list[tuple[int, int]]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {k: getattr(self, k) for k in ("su", "a", "b", "c", "d", "d_lens", "ut")}

    @classmethod
    def from_json(cls, data: dict) -> "Wiring":
        w = cls(**{k: data[k] for k in ("su", "a", "b", "c", "d")})
        w.d_lens = [[tuple(p) for p in row] for row in data["d_lens"]]
        w.ut = [[tuple(p) for p in row] for row in data["ut"]]
        return w


@dataclass
class ReductionArtifact:
    graph: Graph
    instance: ThreePartitionInstance
    gadgets: list[GadgetHandle]
    wiring: Wiring
    c_edges: bool = True

    @property
    def T(self) -> int:
        return self.instance.T

    def gadget_of_edge(self) -> dict[int, int]:
        out = {}
        for k, h in enumerate(self.gadgets):
            for e in h.edge_ids:
                out[e] = k
        return out

    def skeleton_gadgets(self) -> list[int]:
        return [k for k, h in enumerate(self.gadgets) if not h.role.startswith("d-t")]

    def to_json(self) -> dict:
        out = self.graph.to_json()
        out["gadgets"] = [h.to_json() for h in self.gadgets]
        out["instance"] = self.instance.to_json()
        out["wiring"] = self.wiring.to_json()
        out["c_edges"] = self.c_edges
        return out

    @classmethod
    def from_json(cls, data: dict) -> "ReductionArtifact":
        g = Graph.from_json(data)
        gadgets = [GadgetHandle.from_json(x, g) for x in data["gadgets"]]
        return cls(g, ThreePartitionInstance.from_json(data["instance"]), gadgets,
                   Wiring.from_json(data["wiring"]), data.get("c_edges", True))


def vname(kind: str, *ix: int) -> str:
    return kind + "_".join(str(i) for i in ix)


def build_reduction(inst: ThreePartitionInstance, c_edges: bool = True,
                    strict: bool = False) -> ReductionArtifact:
    """Build the min-1-planarity instance for a 3-Partition instance.

    With ``c_edges`` off the edges between consecutive ``c_i`` are omitted;
    see the README for why the literal construction has no yes-drawing.
    """
    rep = validate_three_partition(inst, strict)
    if not rep.ok:
        raise ReductionError("; ".join(rep.problems))
    B, gadgets, w = _construct(inst.n, inst.T, inst.X, c_edges)
    return ReductionArtifact(B.freeze(), inst, gadgets, w, c_edges)


def construction_counts(n: int, T: int, c_edges: bool = True) -> tuple[int, int]:
    """Vertex and edge counts of the constructed graph for any ``n, T >= 1``.

    For ``T < 3`` no instance with positive integers exists (their sum
    would be below ``3n``), so the path counts are padded with zeros.
    """
    if n < 1 or T < 1:
        raise ValueError("n and T must be positive")
    X = [0] * (3 * n)
    for i in range(n):
        X[3 * i] = T
    B, _, _ = _construct(n, T, X, c_edges)
    g = B.freeze()
    return g.n, g.m


def _construct(n: int, T: int, X, c_edges: bool):
    B = GraphBuilder()
    s = B.vertex("s", RoleLabel("S"))
    t = B.vertex("t", RoleLabel("T"))
    A = [B.vertex(vname("a", i), RoleLabel("A", (i,))) for i in range(1, n + 1)]
    Bv = [B.vertex(vname("b", i), RoleLabel("B", (i,))) for i in range(1, n + 1)]
    C = [B.vertex(vname("c", i), RoleLabel("C", (i,))) for i in range(1, n + 1)]
    U = [B.vertex(vname("u", j), RoleLabel("U", (j,))) for j in range(1, 3 * n + 1)]
    D: list[list[str]] = []
    for i in range(1, n + 1):
        D.append([B.vertex(f"d{i}_{j}", RoleLabel("D", (i, j))) for j in range(1, T)])

    def dv(i: int, j: int) -> str:
        """d_{i,j} with d_{i,0} = c_i and d_{i,T} = c_{i+1} (1-based i)."""
        if j == 0:
            return C[i - 1]
        if j == T:
            return C[i % n]
        return D[i - 1][j - 1]

    w = Wiring()
    w.su = [B.edge(s, U[j]) for j in range(3 * n)]
    for i in range(n):
        w.a.append(B.edge(A[i], A[(i + 1) % n]))
        w.b.append(B.edge(Bv[i], Bv[(i + 1) % n]))
        if c_edges:
            w.c.append(B.edge(C[i], C[(i + 1) % n]))
    for i in range(1, n + 1):
        w.d.append([B.edge(dv(i, j - 1), dv(i, j)) for j in range(1, T + 1)])
    for j in range(1, 3 * n + 1):
        row = []
        for r in range(1, X[j - 1] + 1):
            m = B.vertex(f"w{j}_{r}", RoleLabel("SUMid", (j, r)))
            row.append((B.edge(U[j - 1], m), B.edge(m, t)))
        w.ut.append(row)
    for i in range(1, n + 1):
        row = []
        for j in range(1, T + 1):
            m = B.vertex(f"m{i}_{j}", RoleLabel("DPathMid", (i, j)))
            row.append((B.edge(dv(i, j - 1), m), B.edge(m, dv(i, j))))
        w.d_lens.append(row)
    gadgets = []
    for i in range(1, n + 1):
        for role, (x, y) in (("s-a", (s, A[i - 1])), ("a-b", (A[i - 1], Bv[i - 1])),
                             ("b-c", (Bv[i - 1], C[i - 1])), ("c-t", (C[i - 1], t))):
            gadgets.append(_attach(B, x, y, f"{role}({i})", f"{role}({i})"))
    for i in range(1, n + 1):
        for j in range(1, T):
            gadgets.append(_attach(B, dv(i, j), t, f"d-t({i},{j})", f"d-t({i},{j})"))
    return B, gadgets, w


# --------------------------------------------------------------------------
# yes-instance drawing
# --------------------------------------------------------------------------


def _face_layout(art: ReductionArtifact, i: int, triplet: tuple[int, int, int]):
    """Straight-line content of face ``i`` (1-based) between path i (left)
    and path i+1 (right). Returns points, segments and the edge each
    segment stands for (an artifact edge or ``("g", k)`` for a gadget)."""
    n, T, X, w = art.instance.n, art.T, art.instance.X, art.wiring
    F = Fraction
    s_pt, t_pt = (F(T, 2), F(1000 * T)), (F(T, 2), F(-1000 * T))
    pts = {"s": s_pt, "t": t_pt,
           "L.a": (F(0), F(70)), "L.b": (F(0), F(50)), "L.c": (F(0), F(25)),
           "R.a": (F(T), F(70)), "R.b": (F(T), F(50)), "R.c": (F(T), F(25))}
    segs: list[tuple[str, str]] = []
    edge_of: list = []

    def seg(a: str, b: str, e) -> None:
        segs.append((a, b))
        edge_of.append(e)

    gid = {h.role: k for k, h in enumerate(art.gadgets)}
    nxt = i % n + 1
    for side, p in (("L", i), ("R", nxt)):
        seg("s", f"{side}.a", ("g", gid[f"s-a({p})"]))
        seg(f"{side}.a", f"{side}.b", ("g", gid[f"a-b({p})"]))
        seg(f"{side}.b", f"{side}.c", ("g", gid[f"b-c({p})"]))
        seg(f"{side}.c", "t", ("g", gid[f"c-t({p})"]))
    seg("L.a", "R.a", w.a[i - 1])
    seg("L.b", "R.b", w.b[i - 1])
    if art.c_edges:
        seg("L.c", "R.c", w.c[i - 1])
    chain = ["L.c"] + [f"d{i}_{j}" for j in range(1, T)] + ["R.c"]
    for j in range(1, T):
        pts[chain[j]] = (F(j), F(20))
    for j in range(1, T + 1):
        a, b = chain[j - 1], chain[j]
        seg(a, b, w.d[i - 1][j - 1])
        m = f"m{i}_{j}"
        pts[m] = (F(2 * j - 1, 2), F(15))
        e1, e2 = w.d_lens[i - 1][j - 1]
        seg(a, m, e1)
        seg(m, b, e2)
    for j in range(1, T):
        seg(chain[j], "t", ("g", gid[f"d-t({i},{j})"]))
    k = 0
    for j in triplet:
        first = k
        for r in range(1, X[j - 1] + 1):
            # third edge of path k crosses d-edge k+1 at x = k + 3/10
            qx = F(k) + F(3, 10)
            left, right = pts[chain[k]], pts[chain[k + 1]]
            qy = left[1] + (right[1] - left[1]) * (qx - left[0]) / (right[0] - left[0])
            lam = (F(35) - t_pt[1]) / (qy - t_pt[1])
            wp = (t_pt[0] + lam * (qx - t_pt[0]), F(35))
            mid = f"w{j}_{r}"
            pts[mid] = wp
            e1, e2 = w.ut[j - 1][r - 1]
            seg(f"u{j}", mid, e1)
            seg(mid, "t", e2)
            k += 1
        pts[f"u{j}"] = (F(first + k - 1, 2) + F(3, 10), F(60))
        seg("s", f"u{j}", w.su[j - 1])
    if k != T:
        raise ReductionError(f"triplet {triplet} does not sum to T")
    return pts, segs, edge_of


def _sector(rot: list, start, end) -> list:
    """Pieces strictly after ``start`` and before ``end`` counterclockwise."""
    k0 = rot.index(start)
    out = []
    for q in range(1, len(rot)):
        piece = rot[(k0 + q) % len(rot)]
        if piece == end:
            return out
        out.append(piece)
    raise ReductionError("boundary pieces not found")


def _skeleton_drawing(art: ReductionArtifact, p: Partition) -> tuple[Drawing, list]:
    """Drawing of the graph in which every gadget is a single edge."""
    n = art.instance.n
    goe = art.gadget_of_edge()
    ext = [e for e in range(art.graph.m) if e not in goe]
    inner = ext + [("g", k) for k in range(len(art.gadgets))]
    idx_of = {key: q for q, key in enumerate(inner)}
    gadget_verts = {x for h in art.gadgets for x in h.vertices}
    verts = [x for x in art.graph.vertices if x not in gadget_verts]
    edges = [art.graph.edges[e] for e in ext] + [(h.u, h.v) for h in art.gadgets]
    base = Graph(tuple(verts), tuple(edges), {x: art.graph.labels[x] for x in verts
                                              if x in art.graph.labels}, True)
    paths: dict[int, tuple] = {}
    rot: dict[str, tuple] = {}
    crossings = []
    sectors: dict[tuple[str, int], list[str]] = {}
    for i in range(1, n + 1):
        pts, segs, edge_of = _face_layout(art, i, p.triplets[i - 1])
        pl = planarize(pts, segs, prefix=f"f{i}.x")
        glob = {"L.a": f"a{i}", "L.b": f"b{i}", "L.c": f"c{i}",
                "R.a": f"a{i % n + 1}", "R.b": f"b{i % n + 1}", "R.c": f"c{i % n + 1}"}
        ie = [idx_of[e] for e in edge_of]

        def arc(piece) -> str:
            return arc_name(ie[piece[0]], piece[1])

        for k, nodes in enumerate(pl.paths):
            gpath = tuple(glob.get(x, x) for x in nodes)
            if isinstance(edge_of[k], tuple):
                if len(nodes) != 2:
                    raise ReductionError(f"gadget placeholder {edge_of[k]} is crossed")
                paths[ie[k]] = gpath
            else:
                paths[ie[k]] = gpath
        for cid, (k1, k2) in pl.crossings.items():
            crossings.append(CrossingVertex(cid, (ie[k1], ie[k2])))
        bnd = {"s": ("L.a", "R.a"), "t": ("R.c", "L.c"),
               "L.a": ("L.b", "s"), "L.b": ("L.c", "L.a"), "L.c": ("t", "L.b"),
               "R.a": ("s", "R.b"), "R.b": ("R.a", "R.c"), "R.c": ("R.b", "t")}
        piece_to = {}
        for k, (a, b) in enumerate(segs):
            piece_to[(a, b)] = (k, 0)
            piece_to[(b, a)] = (k, 0)
        for x, r in pl.rotation.items():
            if x in bnd:
                start, end = (piece_to[(x, y)] for y in bnd[x])
                sectors[(x, i)] = [arc(q) for q in _sector(r, start, end)]
            else:
                rot[x] = tuple(arc(q) for q in r)
    gid = {h.role: k for k, h in enumerate(art.gadgets)}

    def ph(role: str) -> str:
        return arc_name(idx_of[("g", gid[role])], 0)

    srot, trot = [], []
    for k in range(1, n + 1):
        srot += [ph(f"s-a({k})")] + sectors[("s", k)]
    for k in range(n, 0, -1):
        trot += [ph(f"c-t({k % n + 1})")] + sectors[("t", k)]
    rot["s"], rot["t"] = tuple(srot), tuple(trot)
    for k in range(1, n + 1):
        prev = (k - 2) % n + 1
        up_down = {"a": (f"s-a({k})", f"a-b({k})"), "b": (f"a-b({k})", f"b-c({k})"),
                   "c": (f"b-c({k})", f"c-t({k})")}
        for letter, (up, down) in up_down.items():
            rot[f"{letter}{k}"] = tuple([ph(up)] + sectors[(f"R.{letter}", prev)] + [ph(down)]
                                        + sectors[(f"L.{letter}", k)])
    for x in verts:
        rot.setdefault(x, ())
    d = Drawing(base, tuple(crossings), tuple(paths[q] for q in range(len(inner))), rot)
    return d, inner


def build_yes_drawing(art: ReductionArtifact, p: Partition) -> Drawing:
    """Explicit drawing of the reduction graph for a valid partition.

    Face i (between the s-t paths through a_i and a_{i+1}) receives the
    triplet ``p.triplets[i-1]``; every gadget is then replaced by the
    validated template.
    """
    if not p.is_valid_for(art.instance):
        raise ReductionError("partition is not valid for this instance")
    skel, inner = _skeleton_drawing(art, p)
    rep = validate_drawing(skel)
    if not rep.ok:
        raise ReductionError("skeleton drawing invalid: " + "; ".join(rep.problems[:3]))
    sk = Sketch.from_drawing(skel)
    sk.multi = True
    tsk, cu, cv = template_sketch(art.gadgets[0])
    order = [e for e in inner if not isinstance(e, tuple)]
    pos_of = {key: q for q, key in enumerate(inner)}
    base_t = art.gadgets[0]
    for k, h in enumerate(art.gadgets):
        mapping = dict(zip(base_t.vertices, h.vertices))
        sk.substitute(pos_of[("g", k)], tsk, base_t.u, base_t.v, cu, cv,
                      lambda x, mapping=mapping: mapping[x])
        order.extend(h.edge_ids)
    d = sk.to_drawing()
    if d.base.m != art.graph.m:
        raise ReductionError("edge count mismatch after substitution")
    out = reindex_edges(d, art.graph, order)
    return out


# --------------------------------------------------------------------------
# partition extraction
# --------------------------------------------------------------------------


def external_gadget_crossings(art: ReductionArtifact, d: Drawing) -> list[str]:
    """Crossings where a gadget edge meets an edge outside that gadget."""
    goe = art.gadget_of_edge()
    out = []
    for c in d.crossings:
        g1, g2 = goe.get(c.pair[0]), goe.get(c.pair[1])
        if (g1 is not None or g2 is not None) and g1 != g2:
            out.append(c.id)
    return out


def _check_gadget_crossings(art: ReductionArtifact, d: Drawing) -> None:
    bad = external_gadget_crossings(art, d)
    if bad:
        goe = art.gadget_of_edge()
        c = next(x for x in d.crossings if x.id == bad[0])
        e = c.pair[0] if c.pair[0] in goe else c.pair[1]
        raise ExternalCrossing(f"gadget {art.gadgets[goe[e]].role} is crossed at {c.id} "
                               f"by an edge outside it")


def extract_partition(art: ReductionArtifact, d: Drawing) -> Partition:
    """Read the partition off a drawing whose gadgets are crossed only
    internally: ``P_i`` collects the ``u_j`` lying in the face of the
    skeleton that holds the edge ``a_i a_{i+1}``."""
    if d.base.vertices != art.graph.vertices or d.base.edges != art.graph.edges:
        raise ExtractionError("drawing is not a drawing of the artifact's graph")
    rep = validate_drawing(d)
    if not rep.ok:
        raise ExtractionError("invalid drawing: " + "; ".join(rep.problems[:3]))
    _check_gadget_crossings(art, d)
    n = art.instance.n
    goe = art.gadget_of_edge()
    skel = set(art.skeleton_gadgets())
    idx = d.index
    # contract skeleton gadgets at each skeleton vertex
    svert = {"s", "t"} | {f"{x}{i}" for x in "abc" for i in range(1, n + 1)}
    blocks: dict[str, list] = {}
    for x in svert:
        r = [idx.arcs[h >> 1][0] for h in idx.rot[x]]
        tags = [goe.get(e) if goe.get(e) in skel else None for e in r]
        L = len(tags)
        groups = []  # (gadget, gap arcs following it)
        k0 = next((q for q in range(L) if tags[q] is not None and tags[q - 1] != tags[q]), None)
        if k0 is None:
            raise SkeletonShapeError(f"no skeleton gadget at {x}")
        seen = set()
        q = 0
        while q < L:
            g = tags[(k0 + q) % L]
            if g in seen:
                raise AmbiguousPlacement(f"gadget {art.gadgets[g].role} is not contiguous at {x}")
            seen.add(g)
            while q < L and tags[(k0 + q) % L] == g:
                q += 1
            gap = []
            while q < L and tags[(k0 + q) % L] is None:
                gap.append(idx.rot[x][(k0 + q) % L])
                q += 1
            groups.append((g, gap))
        blocks[x] = groups
    # contracted skeleton: one crossing-free edge per skeleton gadget
    sk_list = sorted(skel)
    eid = {g: q for q, g in enumerate(sk_list)}
    base = Graph(tuple(sorted(svert)), tuple((art.gadgets[g].u, art.gadgets[g].v) for g in sk_list))
    rot = {x: tuple(arc_name(eid[g], 0) for g, _ in blocks[x]) for x in svert}
    contracted = Drawing(base, (), tuple((art.gadgets[g].u, art.gadgets[g].v) for g in sk_list), rot)
    crep = validate_drawing(contracted)
    if not crep.ok:
        raise SkeletonShapeError("contracted skeleton invalid: " + "; ".join(crep.problems[:3]))
    fl = faces(contracted)
    if len(fl) != n or any(len(f) != 8 for f in fl):
        raise SkeletonShapeError(f"skeleton has faces of sizes {[len(f) for f in fl]}, "
                                 f"expected {n} faces of 8 darts")
    # gap after gadget arc at x belongs to the face of the dart arriving at x through it
    face_of_gap: dict[tuple[str, int], int] = {}
    for fi, f in enumerate(fl):
        for dart in f:
            face_of_gap[(dart.head, eid_of(dart.arc))] = fi
    gap_face: dict[int, int] = {}  # half-edge in d -> skeleton face
    for x, groups in blocks.items():
        for g, gap in groups:
            fi = face_of_gap[(x, eid[g])]
            for h in gap:
                gap_face[h] = fi

    def face_at(x: str, e: int, first: bool) -> int:
        path = d.edge_paths[e]
        arc = arc_name(e, 0 if first else len(path) - 2)
        hs = [h for h in idx.rot[x] if idx.arcs[h >> 1] == (e, 0 if first else len(path) - 2)]
        if not hs:
            raise ExtractionError(f"arc {arc} not at {x}")
        return gap_face[hs[0]]

    w = art.wiring
    face_index: dict[int, int] = {}
    for i in range(1, n + 1):
        e = w.a[i - 1]
        f1 = face_at(f"a{i}", e, True)
        f2 = face_at(f"a{i % n + 1}", e, False)
        if f1 != f2:
            raise SkeletonShapeError(f"edge a{i}a{i % n + 1} leaves its face")
        fv = {dart.tail for dart in fl[f1]}
        if not {f"a{i}", f"a{i % n + 1}"} <= fv:
            raise SkeletonShapeError(f"face of edge a{i}a{i % n + 1} lacks its endpoints")
        if f1 in face_index:
            raise AmbiguousPlacement(f"faces of a{face_index[f1]} and a{i} edges coincide")
        face_index[f1] = i
    trip: dict[int, list[int]] = {i: [] for i in range(1, n + 1)}
    for j in range(1, 3 * n + 1):
        fi = face_at("s", w.su[j - 1], True)
        trip[face_index[fi]].append(j)
    bad = {i: v for i, v in trip.items() if len(v) != 3}
    if bad:
        raise ExtractionError(f"faces do not hold three u's each: {bad}")
    return Partition(tuple(tuple(sorted(trip[i])) for i in range(1, n + 1)))


def eid_of(arc: str) -> int:
    return int(arc.split(":")[0])

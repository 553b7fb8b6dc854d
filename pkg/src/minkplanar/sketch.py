"""Mutable planarization used to build drawings step by step.

Half-edges come in twin pairs ``(h, h ^ 1)``. ``rot[x]`` lists the
half-edges at node ``x`` counterclockwise. A *corner* ``(x, h)`` is the gap
right after half-edge ``h`` in ``rot[x]`` (``h is None`` for an isolated
node). The face walk leaves along ``h`` and continues with
``succ(h ^ 1)``, so corner ``(x, h)`` lies in the face of dart ``succ(h)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .drawing import CrossingVertex, Drawing, arc_name
from .graphcore import Graph, RoleLabel

Corner = tuple[str, Optional[int]]


class Sketch:
    def __init__(self) -> None:
        self.vertices: list[str] = []
        self.labels: dict[str, RoleLabel] = {}
        self.edges: list[tuple[str, str]] = []
        self.edge_first: list[Optional[int]] = []
        self.dead_edges: set[int] = set()
        self.crossing_pair: dict[str, tuple[int, int]] = {}
        self.rot: dict[str, list[int]] = {}
        self.he_node: list[Optional[str]] = []
        self.he_edge: list[int] = []
        self.cr: list[int] = []
        self._next_x = 0
        self.multi = False

    # -- construction ------------------------------------------------------

    @classmethod
    def from_drawing(cls, d: Drawing) -> "Sketch":
        sk = cls()
        idx = d.index
        if idx.problems:
            raise ValueError("; ".join(idx.problems[:3]))
        sk.multi = d.base.multi
        sk.vertices = list(d.base.vertices)
        sk.labels = dict(d.base.labels)
        sk.edges = list(d.base.edges)
        sk.cr = list(d.cr)
        sk.he_node = list(idx.node_of)
        sk.he_edge = [idx.arcs[h >> 1][0] for h in range(len(idx.node_of))]
        sk.edge_first = [None] * len(sk.edges)
        for a, (e, s) in enumerate(idx.arcs):
            if s == 0:
                sk.edge_first[e] = 2 * a
        for v in sk.vertices:
            sk.rot[v] = list(idx.rot.get(v, []))
        for c in d.crossings:
            sk.crossing_pair[c.id] = c.pair
            sk.rot[c.id] = list(idx.rot[c.id])
        sk._next_x = len(d.crossings)
        return sk

    def copy(self) -> "Sketch":
        sk = Sketch.__new__(Sketch)
        sk.vertices = list(self.vertices)
        sk.labels = dict(self.labels)
        sk.edges = list(self.edges)
        sk.edge_first = list(self.edge_first)
        sk.dead_edges = set(self.dead_edges)
        sk.crossing_pair = dict(self.crossing_pair)
        sk.rot = {x: list(r) for x, r in self.rot.items()}
        sk.he_node = list(self.he_node)
        sk.he_edge = list(self.he_edge)
        sk.cr = list(self.cr)
        sk._next_x = self._next_x
        sk.multi = self.multi
        return sk

    def add_vertex(self, name: str, label: Optional[RoleLabel] = None) -> str:
        if name in self.rot:
            raise ValueError(f"node {name} exists")
        self.vertices.append(name)
        self.rot[name] = []
        if label is not None:
            self.labels[name] = label
        return name

    def new_edge(self, a: str, b: str) -> int:
        self.edges.append((a, b))
        self.edge_first.append(None)
        self.cr.append(0)
        return len(self.edges) - 1

    def _new_arc(self, e: int, x: str, y: str) -> int:
        h = len(self.he_node)
        self.he_node += [x, y]
        self.he_edge += [e, e]
        return h

    def _crossing_name(self) -> str:
        while True:
            name = f"x{self._next_x}"
            self._next_x += 1
            if name not in self.rot:
                return name

    # -- queries -----------------------------------------------------------

    def is_crossing(self, x: str) -> bool:
        return x in self.crossing_pair

    def pos(self, h: int) -> int:
        return self.rot[self.he_node[h]].index(h)

    def succ(self, h: int) -> int:
        r = self.rot[self.he_node[h]]
        return r[(r.index(h) + 1) % len(r)]

    def face_from(self, h0: int) -> list[int]:
        """Darts of the face containing dart ``h0``."""
        out = [h0]
        h = self.succ(h0 ^ 1)
        while h != h0:
            out.append(h)
            h = self.succ(h ^ 1)
        return out

    def corner_face(self, corner: Corner) -> list[int]:
        x, h = corner
        if h is None:
            raise ValueError(f"corner at isolated node {x} has no face")
        return self.face_from(self.succ(h))

    def face_corners(self, face: Sequence[int]) -> list[Corner]:
        """Corners of a face: the gap at the head of every dart."""
        return [(self.he_node[g ^ 1], g ^ 1) for g in face]

    def corners_of(self, x: str) -> list[Corner]:
        r = self.rot[x]
        return [(x, h) for h in r] if r else [(x, None)]

    def faces(self) -> list[list[int]]:
        seen: set[int] = set()
        out = []
        for h0, x in enumerate(self.he_node):
            if x is None or h0 in seen:
                continue
            f = self.face_from(h0)
            seen.update(f)
            out.append(f)
        return out

    def face_id(self, face: Sequence[int]) -> int:
        return min(face)

    # -- mutation ----------------------------------------------------------

    def _insert_after(self, corner: Corner, h: int) -> None:
        x, g = corner
        r = self.rot[x]
        if g is None:
            if r:
                raise ValueError(f"node {x} is not isolated")
            r.append(h)
        else:
            r.insert(r.index(g) + 1, h)

    def connect(self, e: int, tip: Corner, target: Corner) -> int:
        """Add an arc of edge ``e`` between two corners of one face."""
        x, y = tip[0], target[0]
        h = self._new_arc(e, x, y)
        same = x == y and tip[1] == target[1]
        self._insert_after(tip, h)
        if same:
            # loop arc inside a single corner: keep both ends adjacent
            r = self.rot[x]
            r.insert(r.index(h) + 1, h + 1)
        else:
            self._insert_after(target, h + 1)
        if self.edge_first[e] is None:
            self.edge_first[e] = h if x == self.edges[e][0] else h + 1
        return h

    def cross(self, e: int, tip: Corner, dart: int) -> Corner:
        """Extend edge ``e`` from ``tip`` across the arc of ``dart``.

        ``dart`` must lie on the face of ``tip``. Returns the new tip corner
        on the far side.
        """
        g = dart
        f = self.he_edge[g]
        p, q = self.he_node[g], self.he_node[g ^ 1]
        X = self._crossing_name()
        self.rot[X] = []
        b1 = self._new_arc(f, p, X)
        b2 = self._new_arc(f, X, q)
        rp = self.rot[p]
        rp[rp.index(g)] = b1
        rq = self.rot[q]
        rq[rq.index(g ^ 1)] = b2 + 1
        if self.edge_first[f] == g:
            self.edge_first[f] = b1
        elif self.edge_first[f] == g ^ 1:
            self.edge_first[f] = b2 + 1
        self.he_node[g] = self.he_node[g ^ 1] = None
        t = self._new_arc(e, tip[0], X)
        self.rot[X] = [b1 + 1, t + 1, b2]
        self._insert_after(tip, t)
        if self.edge_first[e] is None:
            self.edge_first[e] = t
        self.crossing_pair[X] = (f, e)
        self.cr[f] += 1
        self.cr[e] += 1
        return (X, b2)

    def route(self, e: int, tip: Corner, darts: Sequence[int], target: Corner) -> None:
        for g in darts:
            tip = self.cross(e, tip, g)
        self.connect(e, tip, target)

    def add_edge(self, a: str, b: str, tip: Corner, darts: Sequence[int], target: Corner) -> int:
        e = self.new_edge(a, b)
        self.route(e, tip, darts, target)
        return e

    def edge_nodes(self, e: int) -> list[str]:
        h = self.edge_first[e]
        nodes = [self.he_node[h]]
        while True:
            y = self.he_node[h ^ 1]
            nodes.append(y)
            if y not in self.crossing_pair:
                return nodes
            r = self.rot[y]
            h = r[(r.index(h ^ 1) + 2) % 4]

    # -- template substitution ---------------------------------------------

    def substitute(self, e: int, other: "Sketch", u: str, v: str,
                   corner_u: Corner, corner_v: Corner, rename) -> dict[str, str]:
        """Replace the crossing-free edge ``e`` (from ``self.edges[e][0]`` to
        ``[1]``) by a copy of ``other`` glued at its vertices ``u``/``v``.

        ``corner_u``/``corner_v`` are corners of ``other`` lying on one common
        face; that face is split between the two faces beside ``e``.
        ``rename`` maps the remaining vertex names of ``other``.
        """
        hu_host = self.edge_first[e]
        if self.cr[e] != 0:
            raise ValueError("only crossing-free edges can be substituted")
        a, b = self.edges[e]
        if self.he_node[hu_host] != a:
            hu_host ^= 1
        names = {u: a, v: b}
        for x in other.vertices:
            if x not in names:
                names[x] = self.add_vertex(rename(x), other.labels.get(x))
        for c in other.crossing_pair:
            names[c] = self._crossing_name()
            self.rot[names[c]] = []
        eoff = len(self.edges)
        for i, (p, q) in enumerate(other.edges):
            self.new_edge(names[p], names[q])
            self.cr[eoff + i] = other.cr[i]
            if i in other.dead_edges:
                self.dead_edges.add(eoff + i)
        hoff = len(self.he_node)
        for h, x in enumerate(other.he_node):
            self.he_node.append(None if x is None else names[x])
            self.he_edge.append(other.he_edge[h] + eoff)
        for i, h in enumerate(other.edge_first):
            self.edge_first[eoff + i] = None if h is None else h + hoff
        for c, (f1, f2) in other.crossing_pair.items():
            self.crossing_pair[names[c]] = (f1 + eoff, f2 + eoff)
        for x, r in other.rot.items():
            if x in (u, v):
                continue
            self.rot[names[x]] = [h + hoff for h in r]

        def linear(x: str, corner: Corner) -> list[int]:
            r = other.rot[x]
            k = r.index(corner[1])
            return [h + hoff for h in r[k + 1:] + r[:k + 1]]

        for x, corner, hh in ((u, corner_u, hu_host), (v, corner_v, hu_host ^ 1)):
            host = self.rot[names[x]]
            i = host.index(hh)
            host[i:i + 1] = linear(x, corner)
        self.he_node[hu_host] = self.he_node[hu_host ^ 1] = None
        self.edge_first[e] = None
        self.dead_edges.add(e)
        return names

    # -- freezing ----------------------------------------------------------

    def to_drawing(self, name_crossings: bool = True) -> Drawing:
        live = [e for e in range(len(self.edges)) if e not in self.dead_edges]
        new_e = {e: i for i, e in enumerate(live)}
        paths = []
        he_arc: dict[int, str] = {}
        for e in live:
            h = self.edge_first[e]
            if h is None:
                raise ValueError(f"edge {self.edges[e]} was never drawn")
            nodes = [self.he_node[h]]
            s = 0
            while True:
                he_arc[h] = arc_name(new_e[e], s)
                he_arc[h ^ 1] = arc_name(new_e[e], s)
                y = self.he_node[h ^ 1]
                nodes.append(y)
                if y not in self.crossing_pair:
                    break
                r = self.rot[y]
                h = r[(r.index(h ^ 1) + 2) % 4]
                s += 1
            if nodes[0] != self.edges[e][0]:
                raise ValueError(f"edge {e} starts at {nodes[0]}, expected {self.edges[e][0]}")
            paths.append(tuple(nodes))
        rename = {}
        cross = []
        order = sorted(self.crossing_pair, key=lambda c: (len(c), c)) if name_crossings else list(self.crossing_pair)
        for k, c in enumerate(order):
            rename[c] = f"x{k}" if name_crossings else c
        if name_crossings and set(rename.values()) & set(self.vertices):
            rename = {c: f"#x{k}" for k, c in enumerate(order)}
        for c in order:
            f1, f2 = self.crossing_pair[c]
            cross.append(CrossingVertex(rename[c], (new_e[f1], new_e[f2])))
        paths = [tuple(rename.get(x, x) for x in p) for p in paths]
        rot = {}
        for x in self.vertices:
            rot[x] = tuple(he_arc[h] for h in self.rot[x])
        for c in order:
            rot[rename[c]] = tuple(he_arc[h] for h in self.rot[c])
        g = Graph(tuple(self.vertices), tuple(self.edges[e] for e in live),
                  {v: r for v, r in self.labels.items()}, self.multi)
        return Drawing(g, tuple(cross), tuple(paths), rot)

"""Labeled graphs, complete graphs and 3-Partition instances."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional, Sequence

import networkx as nx

Edge = tuple[str, str]

ROLES = (
    "S", "T", "A", "B", "C", "U", "D", "WireMid", "UVPathMid", "GadgetInternal",
    "SUMid", "DPathMid",
)
_ROLE_RE = re.compile(r"^(\w+)(?:\(([^)]*)\))?$")


@dataclass(frozen=True)
class RoleLabel:
    role: str
    indices: tuple = ()

    def __post_init__(self) -> None:
        if self.role not in ROLES:
            raise ValueError(f"unknown role {self.role!r}")
        want = {"A": 1, "B": 1, "C": 1, "U": 1, "D": 2, "SUMid": 2, "DPathMid": 2}
        if self.role in want and len(self.indices) != want[self.role]:
            raise ValueError(f"role {self.role} takes {want[self.role]} indices")

    def check_range(self, n: int, T: int) -> bool:
        r, ix = self.role, self.indices
        if r in ("A", "B", "C"):
            return 1 <= ix[0] <= n
        if r == "U":
            return 1 <= ix[0] <= 3 * n
        if r == "D":
            return 1 <= ix[0] <= n and 1 <= ix[1] <= T - 1
        return True

    def __str__(self) -> str:
        if not self.indices:
            return self.role
        return f"{self.role}({','.join(str(i) for i in self.indices)})"

    @classmethod
    def parse(cls, text: str) -> "RoleLabel":
        m = _ROLE_RE.match(text.strip())
        if not m:
            raise ValueError(f"bad role label {text!r}")
        role, inner = m.group(1), m.group(2)
        if not inner:
            return cls(role)
        if role == "GadgetInternal":
            return cls(role, (inner,))
        return cls(role, tuple(int(p) for p in inner.split(",")))


@dataclass(frozen=True)
class Graph:
    """Undirected graph over string vertex ids.

    Edges are an ordered tuple so that an edge can be addressed by its
    position (``eidx``). Self-loops and parallel edges are rejected unless
    ``multi`` is set; the reduction needs them for ``n <= 2`` or ``T = 1``.
    """

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    labels: Mapping[str, RoleLabel] = field(default_factory=dict)
    multi: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        object.__setattr__(self, "labels", dict(self.labels))
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise ValueError("duplicate vertex id")
        seen = set()
        for a, b in self.edges:
            if a not in vs or b not in vs:
                raise ValueError(f"edge {(a, b)} has an unknown endpoint")
            if self.multi:
                continue
            if a == b:
                raise ValueError(f"self-loop at {a}")
            key = frozenset((a, b))
            if key in seen:
                raise ValueError(f"parallel edge {(a, b)}")
            seen.add(key)
        for v in self.labels:
            if v not in vs:
                raise ValueError(f"label on unknown vertex {v}")

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.vertices == other.vertices and self.edges == other.edges
                and dict(self.labels) == dict(other.labels))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def incident(self, v: str) -> list[int]:
        return [i for i, (a, b) in enumerate(self.edges) if v in (a, b)]

    def degree(self, v: str) -> int:
        return sum((a == v) + (b == v) for a, b in self.edges)

    def edge_index(self, a: str, b: str) -> int:
        """Index of the (unique) edge ``{a, b}``."""
        hits = [i for i, e in enumerate(self.edges) if set(e) == {a, b} and (a != b or e[0] == e[1])]
        if len(hits) != 1:
            raise KeyError(f"edge {{{a}, {b}}} occurs {len(hits)} times")
        return hits[0]

    def adjacent(self, i: int, j: int) -> bool:
        """True if edges ``i`` and ``j`` share an endpoint."""
        return bool(set(self.edges[i]) & set(self.edges[j]))

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def induced(self, keep: Iterable[str]) -> tuple["Graph", list[int]]:
        """Induced subgraph plus the map new eidx -> old eidx."""
        keep = set(keep)
        vs = tuple(v for v in self.vertices if v in keep)
        old = [i for i, (a, b) in enumerate(self.edges) if a in keep and b in keep]
        g = Graph(vs, tuple(self.edges[i] for i in old),
                  {v: r for v, r in self.labels.items() if v in keep}, self.multi)
        return g, old

    def to_networkx(self) -> nx.MultiGraph | nx.Graph:
        g = nx.MultiGraph() if self.multi else nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g

    def to_json(self) -> dict:
        out = {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges],
               "labels": {v: str(r) for v, r in self.labels.items()}}
        if self.multi:
            out["multi"] = True
        return out

    @classmethod
    def from_json(cls, data: Mapping) -> "Graph":
        return cls(tuple(str(v) for v in data["vertices"]),
                   tuple((str(a), str(b)) for a, b in data["edges"]),
                   {str(v): RoleLabel.parse(r) for v, r in data.get("labels", {}).items()},
                   bool(data.get("multi", False)))


def complete_graph(t: int) -> Graph:
    """K_t on vertices ``"1" .. "t"``."""
    if t < 1:
        raise ValueError("complete_graph needs t >= 1")
    vs = tuple(str(i) for i in range(1, t + 1))
    return Graph(vs, tuple((vs[i], vs[j]) for i in range(t) for j in range(i + 1, t)))


def graph_from_networkx(g: nx.Graph) -> Graph:
    vs = tuple(str(v) for v in g.nodes)
    return Graph(vs, tuple((str(a), str(b)) for a, b in g.edges))


# --------------------------------------------------------------------------
# 3-Partition
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class ThreePartitionInstance:
    n: int
    X: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "X", tuple(int(x) for x in self.X))
        if self.n < 1:
            raise ValueError("n must be positive")
        if len(self.X) != 3 * self.n:
            raise ValueError(f"expected {3 * self.n} integers, got {len(self.X)}")
        if any(x < 1 for x in self.X):
            raise ValueError("all x_i must be positive")

    @property
    def target(self) -> Fraction:
        return Fraction(sum(self.X), self.n)

    @property
    def T(self) -> int:
        t = self.target
        if t.denominator != 1:
            raise ValueError(f"T = {t} is not an integer")
        return int(t)

    def to_json(self) -> dict:
        return {"n": self.n, "X": list(self.X)}

    @classmethod
    def from_json(cls, data: Mapping) -> "ThreePartitionInstance":
        return cls(int(data["n"]), tuple(data["X"]))


@dataclass(frozen=True)
class Partition:
    """Triplets of 1-based indices into ``X``."""

    triplets: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "triplets", tuple(tuple(sorted(t)) for t in self.triplets))

    def is_valid_for(self, inst: ThreePartitionInstance) -> bool:
        if len(self.triplets) != inst.n:
            return False
        flat = sorted(i for t in self.triplets for i in t)
        if flat != list(range(1, 3 * inst.n + 1)):
            return False
        if inst.target.denominator != 1:
            return False
        return all(len(t) == 3 and sum(inst.X[i - 1] for i in t) == inst.T for t in self.triplets)

    def normalized(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(sorted(self.triplets))

    def same_as(self, other: "Partition") -> bool:
        """Equality up to triplet order."""
        return self.normalized() == other.normalized()

    def to_json(self) -> dict:
        return {"triplets": [list(t) for t in self.triplets]}

    @classmethod
    def from_json(cls, data: Mapping) -> "Partition":
        return cls(tuple(tuple(int(i) for i in t) for t in data["triplets"]))


@dataclass
class ValidationReport:
    ok: bool
    problems: list[str] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok


def validate_three_partition(inst: ThreePartitionInstance, strict: bool = False) -> ValidationReport:
    """Check that T is integral; in strict mode also T/4 < x < T/2 and distinctness."""
    problems = []
    t = inst.target
    if t.denominator != 1:
        problems.append(f"T = {t} is not an integer")
    if strict:
        bad = [x for x in inst.X if not (t / 4 < x < t / 2)]
        if bad:
            problems.append(f"values outside (T/4, T/2): {sorted(set(bad))}")
        if len(set(inst.X)) != len(inst.X):
            problems.append("values are not pairwise distinct")
    return ValidationReport(not problems, problems, {"T": t})


def solve_three_partition(inst: ThreePartitionInstance) -> Optional[Partition]:
    """Exhaustive search; triplets are grown from the smallest unused index."""
    if inst.target.denominator != 1:
        return None
    T = inst.T
    X = inst.X
    m = len(X)

    def rec(free: tuple[int, ...]) -> Optional[list[tuple[int, int, int]]]:
        if not free:
            return []
        i, rest = free[0], free[1:]
        for a in range(len(rest)):
            j = rest[a]
            if X[i] + X[j] >= T:
                continue
            for b in range(a + 1, len(rest)):
                k = rest[b]
                if X[i] + X[j] + X[k] != T:
                    continue
                sub = rec(tuple(x for x in rest if x not in (j, k)))
                if sub is not None:
                    return [(i + 1, j + 1, k + 1)] + sub
        return None

    found = rec(tuple(range(m)))
    return None if found is None else Partition(tuple(found))


def all_triplet_pairings(m: int) -> Iterator[list[tuple[int, int, int]]]:
    """Every split of ``range(m)`` into unordered triplets (m divisible by 3)."""
    if m == 0:
        yield []
        return

    def rec(free: Sequence[int]):
        if not free:
            yield []
            return
        i, rest = free[0], free[1:]
        for a in range(len(rest)):
            for b in range(a + 1, len(rest)):
                nxt = [x for x in rest if x not in (rest[a], rest[b])]
                for tail in rec(nxt):
                    yield [(i, rest[a], rest[b])] + tail

    yield from rec(list(range(m)))

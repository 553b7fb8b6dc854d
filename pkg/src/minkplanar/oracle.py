"""Independent exhaustive searches used as test oracles.

These deliberately share no search code with the package: pair subsets
come from bitmasks, every crossed edge gets every order, and the
planarization is assembled here.
"""

from __future__ import annotations

import itertools

import networkx as nx


def independent_pairs(edges):
    out = []
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            if not set(edges[i]) & set(edges[j]):
                out.append((i, j))
    return out


def pair_subsets(edges, max_size):
    pairs = independent_pairs(edges)
    for mask in range(1 << len(pairs)):
        if bin(mask).count("1") > max_size:
            continue
        yield [pairs[b] for b in range(len(pairs)) if mask >> b & 1]


def min_k_ok(edges, subset, k):
    cr = [0] * len(edges)
    for i, j in subset:
        cr[i] += 1
        cr[j] += 1
    return all(cr[i] <= k or cr[j] <= k for i, j in subset)


def planarizations(edges, subset):
    """Every planarization of ``subset``: one per choice of crossing orders."""
    on = {e: [] for e in range(len(edges))}
    for c, (i, j) in enumerate(subset):
        on[i].append(c)
        on[j].append(c)
    crossed = [e for e in on if on[e]]
    for orders in itertools.product(*(itertools.permutations(on[e]) for e in crossed)):
        G = nx.Graph()
        for e, (a, b) in enumerate(edges):
            seq = [("v", a)]
            if on[e]:
                seq += [("c", c) for c in orders[crossed.index(e)]]
            seq.append(("v", b))
            G.add_nodes_from(seq)
            G.add_edges_from(zip(seq, seq[1:]))
        yield G


def has_min_k_drawing(edges, k, max_size):
    """True iff some set of independent pairs with the min-k property has a
    planar planarization."""
    for subset in pair_subsets(edges, max_size):
        if not min_k_ok(edges, subset, k):
            continue
        if any(nx.check_planarity(G)[0] for G in planarizations(edges, subset)):
            return True
    return False


def _alternates(emb, G):
    for x in G.nodes:
        if x[0] != "c":
            continue
        nb = list(emb.neighbors_cw_order(x))
        if len(nb) != 4:
            return False
        # neighbours along the same edge must be opposite
        edge_of = {}
        for y in nb:
            edge_of[y] = G.edges[x, y]["e"]
        if edge_of[nb[0]] != edge_of[nb[2]] or edge_of[nb[1]] != edge_of[nb[3]]:
            return False
    return True


def _restrictions_ok(n, edges, subset, smaller):
    """Every (n-1)-vertex restriction of ``subset`` is realizable."""
    if smaller is None:
        return True
    sub_edges = list(itertools.combinations(range(n - 1), 2))
    for drop in range(n):
        keep = [v for v in range(n) if v != drop]
        rel = {v: q for q, v in enumerate(keep)}
        img = []
        for i, j in subset:
            if drop in edges[i] or drop in edges[j]:
                continue
            a = sub_edges.index((rel[edges[i][0]], rel[edges[i][1]]))
            b = sub_edges.index((rel[edges[j][0]], rel[edges[j][1]]))
            img.append((min(a, b), max(a, b)))
        if frozenset(img) not in smaller:
            return False
    return True


def realizable_pair_sets(n, smaller=None):
    """Crossing-pair sets of good drawings of K_n, found by testing every
    configuration of independent pairs and every crossing order.

    Returns ``(sets, undecided)`` where ``undecided`` counts planar
    configurations whose planarization is not 3-connected (their embedding
    is not unique, so the touching test is inconclusive).
    """
    vs = list(range(n))
    edges = list(itertools.combinations(vs, 2))
    found, undecided = [], 0
    pairs = independent_pairs(edges)
    for size in range(len(pairs) + 1):
        for subset in itertools.combinations(pairs, size):
            if not _restrictions_ok(n, edges, subset, smaller):
                continue
            ok = None
            for G in planarizations(edges, list(subset)):
                _label_edges(G, edges, subset)
                planar, emb = nx.check_planarity(G)
                if not planar:
                    continue
                if not subset:
                    ok = True
                    break
                if nx.node_connectivity(G) < 3:
                    verdict = _alternating_embedding_exists(G)
                    if verdict is None:
                        undecided += 1
                        continue
                    if verdict:
                        ok = True
                        break
                    continue
                if _alternates(emb, G):
                    ok = True
                    break
            if ok:
                found.append(frozenset(subset))
    return found, undecided


def _alternating_embedding_exists(G, limit=200000):
    """Brute force over rotation systems: is there a plane embedding in
    which every crossing node alternates? ``None`` if too large to try."""
    nodes = list(G.nodes)
    choices = []
    total = 1
    for x in nodes:
        nb = list(G.neighbors(x))
        if x[0] == "c":
            # alternation: fix the pairing, two cyclic orders remain (mirror images)
            by = {}
            for y in nb:
                by.setdefault(G.edges[x, y]["e"], []).append(y)
            (p1, p2), (q1, q2) = by.values()
            opts = [(p1, q1, p2, q2), (p1, q2, p2, q1)]
        else:
            first, rest = nb[0], nb[1:]
            opts = [(first,) + perm for perm in itertools.permutations(rest)]
        choices.append(opts)
        total *= len(opts)
        if total > limit:
            return None
    V, E = G.number_of_nodes(), G.number_of_edges()
    for combo in itertools.product(*choices):
        rot = {x: r for x, r in zip(nodes, combo)}
        nxt = {}
        for x, r in rot.items():
            for q, y in enumerate(r):
                nxt[(y, x)] = (x, r[(q + 1) % len(r)])
        seen, F = set(), 0
        for dart in nxt:
            if dart in seen:
                continue
            F += 1
            d = dart
            while d not in seen:
                seen.add(d)
                d = nxt[d]
        if V - E + F == 2:
            return True
    return False


def _label_edges(G, edges, subset):
    # recover the base edge of each planarization edge from its endpoints
    for x, y in G.edges:
        if x[0] == "v" and y[0] == "v":
            G.edges[x, y]["e"] = edges.index(tuple(sorted((x[1], y[1]))))
        else:
            cs = [z[1] for z in (x, y) if z[0] == "c"]
            cand = set(subset[cs[0]])
            for c in cs[1:]:
                cand &= set(subset[c])
            for z in (x, y):
                if z[0] == "v":
                    cand = {e for e in cand if z[1] in edges[e]}
            G.edges[x, y]["e"] = next(iter(cand))


def weak_classes(n, sets):
    """Number of orbits of pair sets under vertex permutations."""
    edges = list(itertools.combinations(range(n), 2))
    seen = set()
    classes = 0
    for s in sets:
        if s in seen:
            continue
        classes += 1
        for perm in itertools.permutations(range(n)):
            img = []
            for i, j in s:
                a = tuple(sorted((perm[edges[i][0]], perm[edges[i][1]])))
                b = tuple(sorted((perm[edges[j][0]], perm[edges[j][1]])))
                ea, eb = edges.index(a), edges.index(b)
                img.append((min(ea, eb), max(ea, eb)))
            seen.add(frozenset(img))
    return classes

"""Isometric cycle enumeration by wave labeling.

A cycle is isometric when the distance between any two of its vertices
measured along the cycle equals their distance in the whole graph.  Two
wave constructions appear here.  Per edge (s,t), the graph is labeled by
wave depth from t with s blocked, and every strictly depth-descending
route from a neighbor of s down to t closes a candidate cycle through the
edge; candidates confirmed by the reverse labeling are isometric.  The
full enumeration instead anchors at the antipode: every isometric cycle
splits at its farthest point (a vertex against an edge when the length is
odd, a vertex pair when it is even) into two geodesics, which descend
strictly through an ordinary distance labeling, so pairing the descending
routes of every anchor and keeping the isometric survivors is complete.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CandidateOverflow, NotACycle
from .graphs import EdgeSet, Graph, all_pairs_distances


def wave_labels(g: Graph, e: int, reverse: bool = False) -> tuple[int, ...]:
    """Wave labeling for edge e = (s,t): label s = 1, label t = 2, then BFS
    from t assigns 3, 4, ... and never relabels.  Index 0 is padding;
    unreached vertices keep 0."""
    u, v = g.edge_endpoints(e)
    s, t = (v, u) if reverse else (u, v)
    labels = [0] * (g.n + 1)
    labels[s] = 1
    labels[t] = 2
    wave = [t]
    depth = 2
    while wave:
        depth += 1
        nxt = []
        for w in wave:
            for y in g.adjacency(w):
                if labels[y] == 0:
                    labels[y] = depth
                    nxt.append(y)
        wave = nxt
    return tuple(labels)


def _descent_counts(g: Graph, labels: tuple[int, ...], t: int) -> list[int]:
    # number of strictly descending routes from each vertex down to t
    order = sorted((lab, w) for w, lab in enumerate(labels) if lab >= 2 and w > 0)
    cnt = [0] * (g.n + 1)
    cnt[t] = 1
    for lab, w in order:
        if lab <= 2:
            continue
        total = 0
        for y in g.adjacency(w):
            if labels[y] == lab - 1:
                total += cnt[y]
        cnt[w] = total
    return cnt


def _directed_candidates(
    g: Graph, e: int, reverse: bool, limit: int
) -> set[int]:
    u, v = g.edge_endpoints(e)
    s, t = (v, u) if reverse else (u, v)
    labels = wave_labels(g, e, reverse)
    cnt = _descent_counts(g, labels, t)
    anchors = [x for x in g.adjacency(s) if x != t and labels[x] > 0]
    total = sum(cnt[x] for x in anchors)
    if total > limit:
        raise CandidateOverflow(
            f"edge {e}: {total} descending routes exceed limit {limit}"
        )
    base = 1 << (e - 1)
    out: set[int] = set()
    for x in anchors:
        if cnt[x] == 0:
            continue
        start = base | 1 << (g.edge_id(s, x) - 1)
        stack = [(x, start)]
        while stack:
            w, bits = stack.pop()
            if w == t:
                out.add(bits)
                continue
            lab = labels[w]
            for y in g.adjacency(w):
                if labels[y] == lab - 1:
                    stack.append((y, bits | 1 << (g.edge_id(w, y) - 1)))
    return out


def cycles_through_edge(g: Graph, e: int, limit: int = 10**6) -> tuple[EdgeSet, ...]:
    """Isometric cycles through edge e confirmed by the pair of labelings
    anchored at e.  Every confirmed cycle is isometric, but a cycle through
    e whose vertices tie in wave depth can escape both labelings, so the
    full enumeration anchors at cycle antipodes instead."""
    forward = _directed_candidates(g, e, False, limit)
    backward = _directed_candidates(g, e, True, limit)
    both = forward & backward
    sets = [EdgeSet.from_bits(g.m, bits) for bits in both]
    return tuple(sorted(sets, key=lambda c: c.ids()))


def _geodesic_counts(g: Graph, dist_w: tuple[int, ...]) -> list[int]:
    # number of geodesics from each vertex down to the labeling root
    cnt = [0] * (g.n + 1)
    for v in sorted(g.vertices, key=lambda v: dist_w[v]):
        d = dist_w[v]
        if d == 0:
            cnt[v] = 1
        elif d > 0:
            cnt[v] = sum(cnt[y] for y in g.adjacency(v) if dist_w[y] == d - 1)
    return cnt


def _geodesics(g: Graph, start: int, dist_w: tuple[int, ...]) -> list[tuple[frozenset, int]]:
    # every geodesic from start down to the labeling root, as (vertex set, edge bits)
    out: list[tuple[frozenset, int]] = []
    stack = [(start, frozenset([start]), 0)]
    while stack:
        v, verts, bits = stack.pop()
        d = dist_w[v]
        if d == 0:
            out.append((verts, bits))
            continue
        for y in g.adjacency(v):
            if dist_w[y] == d - 1:
                stack.append((y, verts | {y}, bits | 1 << (g.edge_id(v, y) - 1)))
    return out


def isometric_cycles(g: Graph, limit: int = 10**6) -> tuple[EdgeSet, ...]:
    """All isometric cycles, ordered lexicographically by edge ids.

    For each vertex w the graph is labeled by distance from w, where every
    geodesic toward w is a strictly descending route.  An odd isometric
    cycle is two such routes from the endpoints of its antipodal edge,
    disjoint except at w; an even one is two routes from its antipodal
    vertex, disjoint except at the ends.  Joined route pairs that pass the
    isometry check are exactly the isometric cycles."""
    dist = all_pairs_distances(g)
    verdicts: dict[int, bool] = {}
    for w in g.vertices:
        dw = dist[w]
        cnt = _geodesic_counts(g, dw)
        routes: dict[int, list[tuple[frozenset, int]]] = {}

        def routes_from(v: int) -> list[tuple[frozenset, int]]:
            if v not in routes:
                routes[v] = _geodesics(g, v, dw)
            return routes[v]

        for e in g.edge_ids:
            u, v = g.edge_endpoints(e)
            if dw[u] != dw[v] or dw[u] < 1:
                continue
            total = cnt[u] * cnt[v]
            if total > limit:
                raise CandidateOverflow(
                    f"vertex {w}: {total} geodesic pairs exceed limit {limit}"
                )
            top = 1 << (e - 1)
            only_w = frozenset([w])
            for pv, pb in routes_from(u):
                for qv, qb in routes_from(v):
                    if pv & qv != only_w:
                        continue
                    bits = pb | qb | top
                    if bits not in verdicts:
                        cand = EdgeSet.from_bits(g.m, bits)
                        verdicts[bits] = is_isometric(g, cand, dist)
        for x in g.vertices:
            if dw[x] < 2:
                continue
            total = cnt[x] * cnt[x]
            if total > limit:
                raise CandidateOverflow(
                    f"vertex {w}: {total} geodesic pairs exceed limit {limit}"
                )
            ends = frozenset([w, x])
            pairs = routes_from(x)
            for i, (pv, pb) in enumerate(pairs):
                for qv, qb in pairs[i + 1:]:
                    if pv & qv != ends:
                        continue
                    bits = pb | qb
                    if bits not in verdicts:
                        cand = EdgeSet.from_bits(g.m, bits)
                        verdicts[bits] = is_isometric(g, cand, dist)
    sets = [EdgeSet.from_bits(g.m, bits) for bits, ok in verdicts.items() if ok]
    return tuple(sorted(sets, key=lambda c: c.ids()))


def cycle_order(g: Graph, cycle: EdgeSet) -> tuple[int, ...]:
    """Vertices of a simple cycle in traversal order, starting at the
    smallest vertex.  Raises NotACycle otherwise."""
    if not cycle:
        raise NotACycle("empty edge set")
    neigh: dict[int, list[int]] = {}
    for e in cycle:
        a, b = g.edge_endpoints(e)
        neigh.setdefault(a, []).append(b)
        neigh.setdefault(b, []).append(a)
    for v, around in neigh.items():
        if len(around) != 2:
            raise NotACycle(f"vertex {v} meets {len(around)} cycle edges")
    start = min(neigh)
    seq = [start]
    prev = start
    cur = min(neigh[start])
    while cur != start:
        seq.append(cur)
        a, b = neigh[cur]
        prev, cur = cur, (b if a == prev else a)
    if len(seq) != len(neigh):
        raise NotACycle("edge set splits into several cycles")
    return tuple(seq)


def cycle_vertices(g: Graph, cycle: EdgeSet) -> tuple[int, ...]:
    """Sorted vertex set of a cycle given as an edge set."""
    verts: set[int] = set()
    for e in cycle:
        a, b = g.edge_endpoints(e)
        verts.add(a)
        verts.add(b)
    return tuple(sorted(verts))


def is_isometric(
    g: Graph,
    cycle: EdgeSet,
    dist: tuple[tuple[int, ...], ...] | None = None,
) -> bool:
    """Check that along-cycle distances equal graph distances for all pairs."""
    seq = cycle_order(g, cycle)
    if dist is None:
        dist = all_pairs_distances(g)
    length = len(seq)
    for i in range(length):
        for j in range(i + 1, length):
            along = min(j - i, length - (j - i))
            if dist[seq[i]][seq[j]] != along:
                return False
    return True


@dataclass(frozen=True)
class CycleCounts:
    """Per-edge counts, per-vertex counts, and the length multiset of a cycle set."""

    edge_counts: tuple[int, ...]
    vertex_counts: tuple[int, ...]
    lengths: tuple[int, ...]


def cycle_count_invariants(
    g: Graph, cycles: tuple[EdgeSet, ...] | None = None
) -> CycleCounts:
    if cycles is None:
        cycles = isometric_cycles(g)
    edge_counts = [0] * g.m
    vertex_counts = [0] * g.n
    lengths = []
    for c in cycles:
        lengths.append(len(c))
        for e in c:
            edge_counts[e - 1] += 1
        for v in cycle_vertices(g, c):
            vertex_counts[v - 1] += 1
    return CycleCounts(tuple(edge_counts), tuple(vertex_counts), tuple(sorted(lengths)))

"""Isomorph-free exhaustive generation of small graphs.

Graphs on a fixed vertex count are generated level by level in the edge
count, one edge added at a time, with isomorph rejection through a
canonical form: the lexicographically smallest graph6 bit vector over all
vertex relabelings, found by prefix-pruned backtracking.  This is only
meant for desk scale (n <= 10); larger candidate sets come from graph6
files produced by external generators.
"""

from __future__ import annotations

from .graphs import Graph, GraphError, build_graph

CANONICAL_MAX_N = 10


def relabel(g: Graph, perm: list[int] | tuple[int, ...]) -> Graph:
    """Image of g under the vertex relabeling v -> perm[v]."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("perm is not a permutation of the vertex ids")
    return build_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def _vertex_profiles(g: Graph) -> list[tuple]:
    """Per-vertex isomorphism-invariant profile: degree, triangle count,
    and the sorted neighbor degree multiset."""
    adj = g.adj
    deg = [len(a) for a in adj]
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return [
        (
            deg[v],
            sum((masks[v] & masks[w]).bit_count() for w in adj[v]) // 2,
            tuple(sorted(deg[w] for w in adj[v])),
        )
        for v in range(g.n)
    ]


def canonical_form(g: Graph) -> tuple:
    """Canonical certificate: equal exactly for isomorphic graphs.

    Vertices are first partitioned into invariant classes; the certificate
    is that class structure together with the lexicographically largest
    adjacency column vector over all class-respecting relabelings, found
    by prefix-pruned backtracking.  Maximizing packs edges into the
    prefix, which shatters the search quickly on sparse graphs.
    """
    n = g.n
    if n > CANONICAL_MAX_N:
        raise GraphError(f"canonical_form guard: n={n} > {CANONICAL_MAX_N}")
    profiles = _vertex_profiles(g)
    if n <= 1:
        return (tuple(profiles), ())
    # slots are allotted class by class, classes ordered by their profile
    by_class: dict[tuple, list[int]] = {}
    for v, p in enumerate(profiles):
        by_class.setdefault(p, []).append(v)
    class_order = sorted(by_class, reverse=True)
    slot_class: list[list[int]] = []
    for p in class_order:
        slot_class.extend([by_class[p]] * len(by_class[p]))
    masks = [0] * n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    best: tuple[int, ...] | None = None
    perm = [0] * n
    cols = [0] * n
    used = [False] * n

    def rec(j: int) -> None:
        nonlocal best
        if j == n:
            cand = tuple(cols[1:])
            if best is None or cand > best:
                best = cand
            return
        cands = []
        for w in slot_class[j]:
            if used[w]:
                continue
            mw = masks[w]
            col = 0
            for i in range(j):
                col = (col << 1) | ((mw >> perm[i]) & 1)
            cands.append((col, w))
        cands.sort(reverse=True)
        for col, w in cands:
            if best is not None:
                # best may have improved during earlier candidates; compare
                # the fixed node prefix against it afresh
                cmpv = 0
                for i in range(1, j):
                    if cols[i] != best[i - 1]:
                        cmpv = 1 if cols[i] > best[i - 1] else -1
                        break
                if cmpv == -1:
                    break  # prefix now beaten: no completion can win
                if cmpv == 0 and j > 0 and col < best[j - 1]:
                    break  # descending candidates: the rest are worse
            cols[j] = col
            perm[j] = w
            used[w] = True
            rec(j + 1)
            used[w] = False

    rec(0)
    assert best is not None
    class_sig = tuple((p, len(by_class[p])) for p in class_order)
    return (class_sig, best)


def canonical_key(g: Graph) -> tuple[int, tuple[int, ...]]:
    return (g.n, canonical_form(g))


def _iso_invariant(g: Graph) -> tuple:
    """Cheap isomorphism invariant.  Graphs with distinct invariants are
    non-isomorphic; collisions fall back to canonical forms."""
    return tuple(sorted(_vertex_profiles(g)))


def _component_vertex_sets(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def component_certificate(g: Graph) -> tuple:
    """Isomorphism certificate for graphs of any vertex count whose
    connected components each fit the canonical-form guard."""
    certs = []
    for comp in _component_vertex_sets(g):
        pos = {v: i for i, v in enumerate(comp)}
        sub = build_graph(
            len(comp),
            [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos],
        )
        certs.append((sub.n, canonical_form(sub)))
    return tuple(sorted(certs))


class LevelLadder:
    """All isomorphism classes of graphs on exactly n labeled-id vertices,
    grouped by edge count and built on demand by edge augmentation."""

    def __init__(self, n: int):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        if n > CANONICAL_MAX_N:
            raise GraphError(
                f"built-in enumeration caps at n <= {CANONICAL_MAX_N}, got {n}"
            )
        self.n = n
        self._levels: list[list[Graph]] = [[Graph(n, ())]]

    def level(self, m: int) -> list[Graph]:
        if m < 0 or m > self.n * (self.n - 1) // 2:
            return []
        while len(self._levels) <= m:
            self._grow()
        return self._levels[m]

    def _grow(self) -> None:
        parents = self._levels[-1]
        n = self.n
        seen_labeled: set[tuple] = set()
        buckets: dict[tuple, list[Graph]] = {}
        order: list[tuple] = []
        for parent in parents:
            present = parent.edge_set
            for u in range(n):
                for v in range(u + 1, n):
                    if (u, v) in present:
                        continue
                    edges = tuple(sorted(present | {(u, v)}))
                    if edges in seen_labeled:
                        continue
                    seen_labeled.add(edges)
                    child = Graph(n, edges)
                    key = _iso_invariant(child)
                    if key not in buckets:
                        buckets[key] = []
                        order.append(key)
                    buckets[key].append(child)
        out: list[Graph] = []
        for key in order:
            group = buckets[key]
            if len(group) == 1:
                out.append(group[0])
                continue
            seen_canon: set[tuple[int, ...]] = set()
            for child in group:
                form = canonical_form(child)
                if form not in seen_canon:
                    seen_canon.add(form)
                    out.append(child)
        self._levels.append(out)


def graphs_with_at_most_edges(max_m: int) -> dict[int, list[Graph]]:
    """All isomorphism classes with m <= max_m edges and no isolated
    vertices, keyed by edge count.  Components of an m-edge graph have at
    most m+1 vertices, so the per-component canonical form stays within
    the guard for max_m <= 9."""
    levels: dict[int, list[Graph]] = {0: [Graph(0, ())]}
    for m in range(max_m):
        seen: set[tuple] = set()
        out: list[Graph] = []
        for parent in levels[m]:
            n = parent.n
            extensions: list[tuple[int, tuple[tuple[int, int], ...]]] = []
            for u in range(n):
                for v in range(u + 1, n):
                    if (u, v) not in parent.edge_set:
                        extensions.append((n, parent.edges + ((u, v),)))
            for u in range(n):
                extensions.append((n + 1, parent.edges + ((u, n),)))
            extensions.append((n + 2, parent.edges + ((n, n + 1),)))
            for nn, edges in extensions:
                child = build_graph(nn, edges)
                cert = component_certificate(child)
                if cert in seen:
                    continue
                seen.add(cert)
                out.append(child)
        levels[m + 1] = out
    return levels

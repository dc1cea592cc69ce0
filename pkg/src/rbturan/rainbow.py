"""Exact detection of rainbow paths in an edge-colored graph.

A rainbow P_k is a path on k distinct vertices whose k-1 edges carry
pairwise distinct colors.  Detection is depth-first extension from every
start vertex, neighbors in ascending id order, with used colors carried as
a bitset over normalized color ids; the returned witness is therefore the
lexicographically least one and reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    ColoredGraph,
    GraphError,
    PathSpec,
    canonical_edge,
    normalize_colors,
    path_vertex_count,
)


@dataclass(frozen=True)
class RainbowWitness:
    """An explicit rainbow path: the vertex sequence and its edge colors."""

    vertices: tuple[int, ...]
    colors: tuple[int, ...]


def replay_witness(cg: ColoredGraph, w: RainbowWitness, k: int) -> bool:
    """Check a witness against the colored graph it claims to refute."""
    vs = w.vertices
    if len(vs) != k or len(set(vs)) != k or len(w.colors) != k - 1:
        return False
    for i in range(k - 1):
        u, v = vs[i], vs[i + 1]
        if not cg.graph.has_edge(u, v) or cg.color_of(u, v) != w.colors[i]:
            return False
    return len(set(w.colors)) == k - 1


def find_rainbow_path(cg: ColoredGraph, k: int | PathSpec) -> RainbowWitness | None:
    """Least rainbow P_k witness of cg, or None if cg is rainbow-P_k-free."""
    k = path_vertex_count(k)
    if k < 2:
        raise GraphError(f"paths need k >= 2 vertices, got k={k}")
    g = cg.graph
    if k > g.n:
        return None
    norm = normalize_colors(cg)
    color = {e: c for e, c in zip(g.edges, norm.colors)}
    adj = g.adj
    path = [0] * k
    found: list[int] | None = None

    def extend(v: int, depth: int, used_vertices: int, used_colors: int):
        nonlocal found
        if depth == k:
            found = path[:k]
            return True
        for w in adj[v]:
            bit = 1 << w
            if used_vertices & bit:
                continue
            c = color[(v, w) if v < w else (w, v)]
            cbit = 1 << c
            if used_colors & cbit:
                continue
            path[depth] = w
            if extend(w, depth + 1, used_vertices | bit, used_colors | cbit):
                return True
        return False

    for s in range(g.n):
        path[0] = s
        if extend(s, 1, 1 << s, 0):
            break
    if found is None:
        return None
    cols = tuple(cg.color_of(found[i], found[i + 1]) for i in range(k - 1))
    return RainbowWitness(tuple(found), cols)


def find_rainbow_path_through(
    cg: ColoredGraph, e: tuple[int, int], k: int | PathSpec
) -> RainbowWitness | None:
    """A rainbow P_k witness using edge e, or None if no rainbow P_k does."""
    k = path_vertex_count(k)
    if k < 2:
        raise GraphError(f"paths need k >= 2 vertices, got k={k}")
    a, b = canonical_edge(*e)
    if not cg.graph.has_edge(a, b):
        raise GraphError(f"({e[0]},{e[1]}) is not an edge")
    g = cg.graph
    if k > g.n:
        return None
    norm = normalize_colors(cg)
    color = {ed: c for ed, c in zip(g.edges, norm.colors)}
    adj = g.adj
    ce = color[(a, b)]
    base_vertices = (1 << a) | (1 << b)
    base_colors = 1 << ce

    def arms(start: int, length: int, used_v: int, used_c: int):
        """All rainbow extensions of the given length from start, in
        ascending neighbor order; yields (vertex list, used_v, used_c)."""
        if length == 0:
            yield [], used_v, used_c
            return
        for w in adj[start]:
            bit = 1 << w
            if used_v & bit:
                continue
            c = color[(start, w) if start < w else (w, start)]
            cbit = 1 << c
            if used_c & cbit:
                continue
            for rest, uv, uc in arms(w, length - 1, used_v | bit, used_c | cbit):
                yield [w] + rest, uv, uc

    for left_len in range(k - 1):
        right_len = k - 2 - left_len
        for left, uv, uc in arms(a, left_len, base_vertices, base_colors):
            for right, _, _ in arms(b, right_len, uv, uc):
                seq = list(reversed(left)) + [a, b] + right
                cols = tuple(cg.color_of(seq[i], seq[i + 1]) for i in range(k - 1))
                return RainbowWitness(tuple(seq), cols)
    return None

"""Complete backtracking search for proper rainbow-P_k-free edge colorings.

Colors are assigned to edges in a fixed static order with the canonical
symmetry-breaking rule: the color of the next edge is at most one more
than the largest color used so far.  This enumerates exactly one
representative per color-renaming class, so with max_colors = e(g) an
UNSAT answer is unconditional.  Properness is maintained through
per-vertex used-color bitmasks; the rainbow constraint is enforced by
checking, after each assignment, every k-vertex path whose edges just
became fully colored (paths are precomputed and bucketed by the position
of their last-colored edge).
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .graphs import (
    ColoredGraph,
    Graph,
    GraphError,
    PathSpec,
    normalize_colors,
    path_vertex_count,
)

SAT = "SAT"
UNSAT = "UNSAT"
BUDGET_EXCEEDED = "BUDGET_EXCEEDED"


class OracleSizeError(GraphError):
    """Input too large for the naive enumeration oracle."""


@dataclass(frozen=True)
class SearchOutcome:
    status: str  # SAT | UNSAT | BUDGET_EXCEEDED
    certificate: ColoredGraph | None
    nodes: int
    max_colors_used: int
    seconds: float

    @property
    def sat(self) -> bool:
        return self.status == SAT


def _order_positions(g: Graph) -> list[int]:
    """Static edge order: decreasing endpoint degree sum, ties by canonical
    edge order (fail-first and deterministic)."""
    deg = g.degrees()
    return sorted(
        range(len(g.edges)),
        key=lambda i: (-(deg[g.edges[i][0]] + deg[g.edges[i][1]]), g.edges[i]),
    )


def _k_paths(g: Graph, k: int) -> list[tuple[int, ...]]:
    """All simple paths on exactly k vertices, as tuples of edge indices,
    one orientation per path (first endpoint below last)."""
    if k > g.n or k < 2:
        return []
    eidx = {e: i for i, e in enumerate(g.edges)}
    adj = g.adj
    out: list[tuple[int, ...]] = []
    seq = [0] * k

    def extend(v: int, depth: int, used: int) -> None:
        if depth == k:
            if seq[0] < seq[-1]:
                out.append(
                    tuple(
                        eidx[(seq[i], seq[i + 1]) if seq[i] < seq[i + 1] else (seq[i + 1], seq[i])]
                        for i in range(k - 1)
                    )
                )
            return
        for w in adj[v]:
            bit = 1 << w
            if used & bit:
                continue
            seq[depth] = w
            extend(w, depth + 1, used | bit)

    for s in range(g.n):
        seq[0] = s
        extend(s, 1, 1 << s)
    return out


class _Searcher:
    """Shared machinery for the decision search and the complete
    enumeration of canonical coloring classes."""

    def __init__(self, g: Graph, k: int | PathSpec, max_colors: int | None):
        k = path_vertex_count(k)
        if k < 3:
            raise GraphError(f"coloring search needs k >= 3, got k={k}")
        if max_colors is not None and max_colors < 1:
            raise GraphError(f"max_colors must be positive, got {max_colors}")
        self.g = g
        self.k = k
        m = len(g.edges)
        self.m = m
        self.max_colors = m if max_colors is None else max_colors
        self.order = _order_positions(g)
        self.endpoints = [g.edges[i] for i in self.order]
        pos_of = {ei: j for j, ei in enumerate(self.order)}
        # Paths cannot be rainbow at all when they carry more edges than
        # there are colors available; skip the whole apparatus then.
        self.buckets: list[list[tuple[int, ...]]] = [[] for _ in range(m)]
        if k - 1 <= self.max_colors:
            for path in _k_paths(g, k):
                positions = tuple(pos_of[i] for i in path)
                self.buckets[max(positions)].append(positions)
        self.nodes = 0

    def positions_to_colored(self, colors_by_pos: list[int]) -> ColoredGraph:
        by_edge = [0] * self.m
        for j, ei in enumerate(self.order):
            by_edge[ei] = colors_by_pos[j]
        return normalize_colors(ColoredGraph(self.g, tuple(by_edge)))

    def solve_first(
        self, node_budget: int | None, time_budget: float | None
    ) -> tuple[str, list[int] | None]:
        m = self.m
        if m == 0:
            return SAT, []
        endpoints = self.endpoints
        buckets = self.buckets
        max_colors = self.max_colors
        colors = [0] * m
        used = [0] * self.g.n
        deadline = None if time_budget is None else time.monotonic() + time_budget
        nodes = 0

        # Iterative depth-first search over positions; frame state is the
        # next candidate color per position.
        next_color = [1] * (m + 1)
        max_used = [0] * (m + 1)
        j = 0
        while True:
            if j == m:
                self.nodes = nodes
                return SAT, colors
            u, v = endpoints[j]
            forbid = used[u] | used[v]
            limit = max_colors if max_used[j] >= max_colors else max_used[j] + 1
            c = next_color[j]
            advanced = False
            while c <= limit:
                bit = 1 << c
                if not forbid & bit:
                    nodes += 1
                    if node_budget is not None and nodes > node_budget:
                        self.nodes = nodes
                        return BUDGET_EXCEEDED, None
                    if deadline is not None and not nodes & 4095 and time.monotonic() > deadline:
                        self.nodes = nodes
                        return BUDGET_EXCEEDED, None
                    colors[j] = c
                    rainbow = False
                    for path in buckets[j]:
                        acc = 0
                        for p in path:
                            pb = 1 << colors[p]
                            if acc & pb:
                                break
                            acc |= pb
                        else:
                            rainbow = True
                            break
                    if not rainbow:
                        used[u] = used[u] | bit
                        used[v] = used[v] | bit
                        next_color[j] = c + 1
                        j += 1
                        next_color[j] = 1
                        max_used[j] = max_used[j - 1] if c <= max_used[j - 1] else c
                        advanced = True
                        break
                c += 1
            if advanced:
                continue
            # exhausted colors at position j: backtrack
            colors[j] = 0
            j -= 1
            if j < 0:
                self.nodes = nodes
                return UNSAT, None
            u, v = endpoints[j]
            bit = 1 << colors[j]
            used[u] &= ~bit
            used[v] &= ~bit

    def solve_all(self) -> list[list[int]]:
        """All canonical solutions (complete enumeration), by position."""
        found: list[list[int]] = []
        m = self.m
        if m == 0:
            return [[]]
        endpoints = self.endpoints
        buckets = self.buckets
        max_colors = self.max_colors
        colors = [0] * m
        used = [0] * self.g.n

        def rec(j: int, max_used: int) -> None:
            self.nodes += 1
            if j == m:
                found.append(colors[:])
                return
            u, v = endpoints[j]
            forbid = used[u] | used[v]
            limit = max_colors if max_used >= max_colors else max_used + 1
            for c in range(1, limit + 1):
                bit = 1 << c
                if forbid & bit:
                    continue
                colors[j] = c
                rainbow = False
                for path in buckets[j]:
                    acc = 0
                    for p in path:
                        pb = 1 << colors[p]
                        if acc & pb:
                            break
                        acc |= pb
                    else:
                        rainbow = True
                        break
                if not rainbow:
                    used[u] |= bit
                    used[v] |= bit
                    rec(j + 1, max_used if c <= max_used else c)
                    used[u] &= ~bit
                    used[v] &= ~bit
            colors[j] = 0

        rec(0, 0)
        return found


def find_coloring(
    g: Graph,
    k: int | PathSpec,
    max_colors: int | None = None,
    node_budget: int | None = None,
    time_budget: float | None = None,
) -> SearchOutcome:
    """Decide whether g has a proper edge-coloring with at most max_colors
    colors (default e(g), which makes UNSAT unconditional) and no rainbow
    P_k.  Budget exhaustion is reported as BUDGET_EXCEEDED, never UNSAT.
    """
    t0 = time.monotonic()
    searcher = _Searcher(g, k, max_colors)
    status, colors = searcher.solve_first(node_budget, time_budget)
    elapsed = time.monotonic() - t0
    if status == SAT:
        cert = searcher.positions_to_colored(colors)
        return SearchOutcome(SAT, cert, searcher.nodes, cert.colors_used(), elapsed)
    return SearchOutcome(status, None, searcher.nodes, 0, elapsed)


def iter_coloring_classes(g: Graph, k: int, max_colors: int | None = None) -> list[ColoredGraph]:
    """All color-renaming classes of proper rainbow-P_k-free colorings,
    each as its canonical (first-occurrence over canonical edge order)
    representative, sorted for determinism."""
    searcher = _Searcher(g, k, max_colors)
    reps = [searcher.positions_to_colored(sol) for sol in searcher.solve_all()]
    reps.sort(key=lambda cg: cg.colors)
    return reps


def oracle_enumerate(g: Graph, k: int | PathSpec) -> int:
    """Independent cross-check: count color-renaming classes of proper
    rainbow-P_k-free colorings by plain exhaustive enumeration.

    Canonical colorings are enumerated over the canonical edge order with
    pairwise properness scans; each complete coloring is checked by a
    brute-force walk over all k-vertex sequences.  Guarded to e(g) <= 12.
    """
    m = len(g.edges)
    if m > 12:
        raise OracleSizeError(f"oracle_enumerate guard: e(g)={m} > 12")
    k = path_vertex_count(k)
    if k < 2:
        raise GraphError(f"paths need k >= 2 vertices, got k={k}")
    edges = g.edges
    incident = [
        [j for j in range(m) if j != i and set(edges[i]) & set(edges[j])]
        for i in range(m)
    ]
    colors = [0] * m
    count = 0

    def leaf_has_rainbow() -> bool:
        if k > g.n:
            return False
        adj = g.adj
        cmap = {e: colors[i] for i, e in enumerate(edges)}
        seq = [0] * k

        def walk(v: int, depth: int, used: int) -> bool:
            if depth == k:
                cs = {
                    cmap[(seq[i], seq[i + 1]) if seq[i] < seq[i + 1] else (seq[i + 1], seq[i])]
                    for i in range(k - 1)
                }
                return len(cs) == k - 1
            for w in adj[v]:
                bit = 1 << w
                if used & bit:
                    continue
                seq[depth] = w
                if walk(w, depth + 1, used | bit):
                    return True
            return False

        for s in range(g.n):
            seq[0] = s
            if walk(s, 1, 1 << s):
                return True
        return False

    def rec(i: int, max_used: int) -> None:
        nonlocal count
        if i == m:
            if not leaf_has_rainbow():
                count += 1
            return
        for c in range(1, max_used + 2):
            if any(colors[j] == c for j in incident[i]):
                continue
            colors[i] = c
            rec(i + 1, max_used if c <= max_used else c)
        colors[i] = 0

    rec(0, 0)
    return count

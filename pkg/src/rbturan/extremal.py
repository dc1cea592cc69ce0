"""Exhaustive computation of the planar rainbow path-avoidance extremal
value: isomorph-free candidate enumeration, reduction and planarity
filters, complete coloring search per candidate, parallel orchestration,
and certified reporting.

A level (n, m) is *refuted* when every candidate surviving the filters is
UNSAT.  Refuting with the reduction filter (minimum degree >= 2, no edge
between two degree-2 vertices) is sound against the bound floor(3n/2):
deleting a degree-<=1 vertex loses at most 1 edge while the bound drops
by at least 1, and deleting an adjacent degree-2 pair loses at most 3
edges while the bound drops by exactly 3, and colorability is preserved
under taking subgraphs.  So a minimal counterexample above the bound is
reduced, and refuting all reduced planar levels (n', floor(3n'/2)+1) for
n' <= N refutes every planar graph above the bound for every n' <= N.
Values claimed at other bounds are refuted without the reduction filter.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from multiprocessing import get_context
from typing import Any, Iterable

from .codec import colored_to_doc, decode_graph6, encode_graph6
from .colorer import BUDGET_EXCEEDED, SAT, UNSAT, find_coloring
from .constructions import (
    ConstructionSpec,
    make,
    validate_construction,
)
from .generation import LevelLadder
from .graphs import ColoredGraph, Graph, GraphError, build_colored_graph
from .planarity import is_planar

BUILTIN_MAX_N = 8


def is_reduced(g: Graph) -> bool:
    """Minimum degree >= 2 and no edge joining two degree-2 vertices."""
    deg = g.degrees()
    if g.n and min(deg) < 2:
        return False
    return not any(deg[u] == 2 and deg[v] == 2 for u, v in g.edges)


def planar_edge_cap(n: int) -> int:
    """Largest edge count a planar graph on n vertices can have."""
    full = n * (n - 1) // 2
    return full if n < 3 else min(full, 3 * n - 6)


@dataclass(frozen=True)
class CandidateStream:
    """A complete, isomorph-free list of n-vertex m-edge graphs surviving
    the requested filters."""

    source: str
    n: int
    m: int
    raw_count: int
    reduced_count: int
    planar_count: int
    graphs: tuple[Graph, ...]
    filters: tuple[str, ...]


_LADDERS: dict[int, LevelLadder] = {}


def _ladder(n: int) -> LevelLadder:
    if n not in _LADDERS:
        _LADDERS[n] = LevelLadder(n)
    return _LADDERS[n]


def enumerate_candidates(
    n: int,
    m: int,
    reduced: bool = False,
    planar: bool = False,
    graph6_path: str | None = None,
) -> CandidateStream:
    """Stream of pairwise non-isomorphic (n, m) graphs, filtered.

    Filters run in cost order: the degree-based reduction filter first,
    then the Euler bound inside the full planarity test.  Built-in
    generation covers n <= 8; larger n must come from a graph6 file,
    which is trusted to be complete and isomorph-free (recorded in the
    stream's source).
    """
    if graph6_path is not None:
        graphs: Iterable[Graph] = []
        with open(graph6_path, "r", encoding="ascii") as fh:
            lines = [ln.strip() for ln in fh if ln.strip()]
        decoded = [decode_graph6(ln) for ln in lines]
        for g in decoded:
            if g.n != n or len(g.edges) != m:
                raise GraphError(
                    f"graph6 candidate with n={g.n}, m={len(g.edges)}; "
                    f"expected ({n},{m})"
                )
        graphs = decoded
        source = f"graph6:{graph6_path}"
    else:
        if n > BUILTIN_MAX_N:
            raise GraphError(
                f"built-in enumeration caps at n <= {BUILTIN_MAX_N}; "
                f"supply --from-graph6 for n={n}"
            )
        graphs = _ladder(n).level(m)
        source = "built-in"
    graphs = list(graphs)
    raw = len(graphs)
    if reduced:
        graphs = [g for g in graphs if is_reduced(g)]
    n_reduced = len(graphs)
    if planar:
        graphs = [g for g in graphs if is_planar(g)]
    filters = tuple(
        name for name, on in (("reduced", reduced), ("planar", planar)) if on
    )
    return CandidateStream(
        source=source,
        n=n,
        m=m,
        raw_count=raw,
        reduced_count=n_reduced,
        planar_count=len(graphs),
        graphs=tuple(graphs),
        filters=filters,
    )


@dataclass(frozen=True)
class LevelReport:
    """Outcome of running the coloring search on every candidate of one
    (n, m) level."""

    n: int
    m: int
    k: int
    filters: tuple[str, ...]
    source: str
    candidates: int  # raw isomorphism classes at (n, m)
    after_reduction: int
    after_planarity: int
    unsat: int
    sat: int
    budget_exceeded: int
    nodes: int
    status: str  # PASS | FAIL | BUDGET
    digest: str
    first_sat_index: int | None
    first_sat_certificate: ColoredGraph | None

    @property
    def passed(self) -> bool:
        return self.status == "PASS"

    def to_doc(self) -> dict[str, Any]:
        doc: dict[str, Any] = {
            "n": self.n,
            "m": self.m,
            "k": self.k,
            "filters": list(self.filters),
            "source": self.source,
            "counts": {
                "candidates": self.candidates,
                "reduced": self.after_reduction,
                "planar": self.after_planarity,
                "unsat": self.unsat,
                "sat": self.sat,
                "budget_exceeded": self.budget_exceeded,
            },
            "nodes": self.nodes,
            "status": self.status,
            "digest": self.digest,
        }
        return doc


def _solve_chunk(payload: tuple) -> list[tuple[int, str, int, tuple[int, ...] | None]]:
    """Worker: run the coloring search on one chunk of candidates.

    Returns (index, status, nodes, certificate colors) per graph; the
    certificate is kept only for the chunk's first SAT candidate.
    """
    lines, start, k, max_colors, node_budget = payload
    out = []
    have_sat = False
    for off, line in enumerate(lines):
        g = decode_graph6(line)
        outcome = find_coloring(g, k, max_colors, node_budget=node_budget)
        cert = None
        if outcome.sat and not have_sat:
            cert = outcome.certificate.colors
            have_sat = True
        out.append((start + off, outcome.status, outcome.nodes, cert))
    return out


def run_level(
    n: int,
    m: int,
    k: int,
    *,
    reduced: bool,
    planar: bool = True,
    jobs: int = 1,
    node_budget: int | None = None,
    graph6_path: str | None = None,
) -> LevelReport:
    """Run the complete coloring search over every filtered candidate of
    the (n, m) level.  The level PASSes when every candidate is UNSAT;
    any budget-exceeded outcome poisons the level (BUDGET), it is never
    silently dropped."""
    stream = enumerate_candidates(
        n, m, reduced=reduced, planar=planar, graph6_path=graph6_path
    )
    results: list[tuple[int, str, int, tuple[int, ...] | None]] = []
    graphs = stream.graphs
    max_colors = max(1, m)  # the searcher needs a positive budget even at m=0
    if jobs <= 1 or len(graphs) <= 1:
        results = _solve_chunk(
            ([encode_graph6(g) for g in graphs], 0, k, max_colors, node_budget)
        )
    else:
        jobs = min(jobs, len(graphs))
        size = (len(graphs) + jobs - 1) // jobs
        payloads = []
        for w in range(jobs):
            chunk = graphs[w * size : (w + 1) * size]
            if chunk:
                payloads.append(
                    ([encode_graph6(g) for g in chunk], w * size, k, max_colors, node_budget)
                )
        try:
            ctx = get_context("fork")
        except ValueError:  # platforms without fork; payloads pickle fine
            ctx = get_context("spawn")
        with ctx.Pool(processes=len(payloads)) as pool:
            for part in pool.map(_solve_chunk, payloads):
                results.extend(part)
    results.sort(key=lambda r: r[0])
    unsat = sum(1 for r in results if r[1] == UNSAT)
    sat = sum(1 for r in results if r[1] == SAT)
    budget = sum(1 for r in results if r[1] == BUDGET_EXCEEDED)
    nodes = sum(r[2] for r in results)
    digest = hashlib.sha256(
        "\n".join(
            f"{idx}:{encode_graph6(graphs[idx])}:{status}"
            for idx, status, _, _ in results
        ).encode()
    ).hexdigest()
    first_sat_index = None
    first_cert = None
    for idx, status, _, cert in results:
        if status == SAT:
            first_sat_index = idx
            if cert is not None:
                first_cert = ColoredGraph(graphs[idx], cert)
            break
    if sat:
        status = "FAIL"
    elif budget:
        status = "BUDGET"
    else:
        status = "PASS"
    return LevelReport(
        n=n,
        m=m,
        k=k,
        filters=stream.filters,
        source=stream.source,
        candidates=stream.raw_count,
        after_reduction=stream.reduced_count,
        after_planarity=stream.planar_count,
        unsat=unsat,
        sat=sat,
        budget_exceeded=budget,
        nodes=nodes,
        status=status,
        digest=digest,
        first_sat_index=first_sat_index,
        first_sat_certificate=first_cert,
    )


def refute_level(
    n: int,
    m: int,
    k: int,
    *,
    reduced: bool = True,
    planar: bool = True,
    jobs: int = 1,
    node_budget: int | None = None,
    graph6_path: str | None = None,
) -> LevelReport:
    """PASS iff every (reduced) planar n-vertex m-edge graph is UNSAT."""
    return run_level(
        n,
        m,
        k,
        reduced=reduced,
        planar=planar,
        jobs=jobs,
        node_budget=node_budget,
        graph6_path=graph6_path,
    )


@dataclass(frozen=True)
class ExtremalReport:
    n: int
    k: int
    value: int
    achiever: ColoredGraph
    achiever_provenance: str
    refutation: LevelReport | None  # at (n, value + 1); None iff vacuous
    chain: tuple[LevelReport, ...]
    source: str
    status: str  # OK | FAIL | BUDGET

    def to_doc(self) -> dict[str, Any]:
        doc: dict[str, Any] = {
            "n": self.n,
            "k": self.k,
            "value": self.value,
            "status": self.status,
            "achiever": colored_to_doc(
                self.achiever, meta={"provenance": self.achiever_provenance}
            ),
            "provenance": self.source,
        }
        if self.refutation is None:
            doc["refutation"] = {
                "vacuous": True,
                "note": "value equals the planar edge maximum",
            }
        else:
            doc["refutation"] = self.refutation.to_doc()
        if self.chain:
            doc["chain"] = [lv.to_doc() for lv in self.chain]
        return doc


def _claimed_achiever(n: int, k: int) -> tuple[ColoredGraph, str] | None:
    """A construction known to achieve the extremal value at (n, k), or
    None when the value must be found by level descent."""
    try:
        if k == 3:
            edges = [(2 * i, 2 * i + 1, 1 + i) for i in range(n // 2)]
            return build_colored_graph(n, edges), "matching"
        if k == 4 and n % 4 == 0 and n >= 4:
            return make(ConstructionSpec("k4-blocks", n=n)), "k4-blocks"
        if k == 5 and n >= 4:
            return make(ConstructionSpec("gn", n=n)), "gn"
        if k == 6 and n == 6:
            return make(ConstructionSpec("octahedron")), "octahedron"
        if k == 7 and n == 12:
            return make(ConstructionSpec("icosahedron")), "icosahedron"
        if k >= 8 and n >= k:
            if n % 2 == 0:
                return make(ConstructionSpec("double-wheel", n=n)), "double-wheel"
            return make(ConstructionSpec("k2-path", n=n)), "k2-path"
    except GraphError:
        return None
    return None


def compute_extremal(
    n: int,
    k: int,
    *,
    jobs: int = 1,
    node_budget: int | None = None,
    graph6_path: str | None = None,
) -> ExtremalReport:
    """Certified extremal value: the largest m such that some planar
    n-vertex m-edge graph admits a proper rainbow-P_k-free coloring.

    The lower bound comes from a validated achiever (a known construction
    when one applies, otherwise the first SAT candidate found by level
    descent); the upper bound from refuting level value+1, which settles
    all higher levels because SAT survives edge deletion.  When the value
    is floor(3n/2) the refutation runs the reduction-filtered level
    (n', floor(3n'/2)+1) for every n' in 4..n (see module docstring).
    """
    if n < 1:
        raise GraphError(f"need n >= 1, got n={n}")
    if k < 3:
        raise GraphError(f"need k >= 3, got k={k}")
    cap = planar_edge_cap(n)
    claim = _claimed_achiever(n, k)
    if claim is not None:
        achiever, label = claim
        value = len(achiever.edges)
        gate = validate_construction(achiever, k, value)
        if not gate.passed:  # pragma: no cover - constructions are validated
            raise GraphError(f"claimed achiever {label} failed validation: {gate}")
        chain: tuple[LevelReport, ...] = ()
        refutation: LevelReport | None = None
        status = "OK"
        if value < cap:
            if value == (3 * n) // 2:
                # reduction-filtered minimality chain over all n' <= n; the
                # top level may come from an external graph6 file
                levels = []
                for n2 in range(4, n + 1):
                    levels.append(
                        run_level(
                            n2,
                            (3 * n2) // 2 + 1,
                            k,
                            reduced=True,
                            planar=True,
                            jobs=jobs,
                            node_budget=node_budget,
                            graph6_path=graph6_path if n2 == n else None,
                        )
                    )
                chain = tuple(levels)
                refutation = levels[-1]
            else:
                refutation = run_level(
                    n,
                    value + 1,
                    k,
                    reduced=False,
                    planar=True,
                    jobs=jobs,
                    node_budget=node_budget,
                    graph6_path=graph6_path,
                )
            bad = [lv for lv in (chain or (refutation,)) if not lv.passed]
            if bad:
                status = "BUDGET" if all(lv.status == "BUDGET" for lv in bad) else "FAIL"
        return ExtremalReport(
            n=n,
            k=k,
            value=value,
            achiever=achiever,
            achiever_provenance=f"construction:{label}",
            refutation=refutation,
            chain=chain,
            source="built-in" if graph6_path is None else f"graph6:{graph6_path}",
            status=status,
        )
    # No known construction: descend the levels from the planar cap.
    # (graph6 files describe a single level, so descent is built-in only.)
    previous: LevelReport | None = None
    for m in range(cap, -1, -1):
        level = run_level(
            n,
            m,
            k,
            reduced=False,
            planar=True,
            jobs=jobs,
            node_budget=node_budget,
        )
        if level.status == "BUDGET":
            raise GraphError(
                f"level ({n},{m}) exhausted the search budget; "
                "rerun with a larger --budget-nodes"
            )
        if level.first_sat_index is not None:
            return ExtremalReport(
                n=n,
                k=k,
                value=m,
                achiever=level.first_sat_certificate,
                achiever_provenance=f"search:index-{level.first_sat_index}",
                refutation=previous,
                chain=(),
                source=level.source,
                status="OK",
            )
        previous = level
    raise GraphError(f"no level of ({n}, k={k}) is satisfiable")  # pragma: no cover

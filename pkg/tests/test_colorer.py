from __future__ import annotations

import itertools
import random

import pytest

from rbturan.colorer import (
    BUDGET_EXCEEDED,
    UNSAT,
    OracleSizeError,
    find_coloring,
    iter_coloring_classes,
    oracle_enumerate,
)
from rbturan.generation import relabel
from rbturan.graphs import GraphError, build_graph, is_proper
from rbturan.rainbow import find_rainbow_path

K4 = build_graph(4, list(itertools.combinations(range(4), 2)))
C4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
BOW_TIE = build_graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
PRISM6 = build_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def test_k4_sat_with_three_colors():
    out = find_coloring(K4, 5, 6)
    assert out.sat
    assert out.max_colors_used == 3
    assert is_proper(out.certificate)
    assert find_rainbow_path(out.certificate, 5) is None


def test_c4_unsat_for_p3():
    assert find_coloring(C4, 3, 4).status == UNSAT


def test_bow_tie_with_pendant_unsat():
    g = build_graph(6, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (2, 5)])
    assert find_coloring(g, 5, 7).status == UNSAT


def test_prism_sat():
    out = find_coloring(PRISM6, 5, 9)
    assert out.sat
    assert is_proper(out.certificate)
    assert find_rainbow_path(out.certificate, 5) is None


def test_preconditions():
    with pytest.raises(GraphError):
        find_coloring(K4, 2, 6)
    with pytest.raises(GraphError):
        find_coloring(K4, 5, 0)


def test_budget_reported_not_unsat():
    g = build_graph(8, [(i, j) for i in range(8) for j in range(i + 1, 8) if (i + j) % 3])
    out = find_coloring(g, 5, len(g.edges), node_budget=3)
    assert out.status == BUDGET_EXCEEDED
    assert out.certificate is None


def test_empty_graph_is_sat():
    g = build_graph(3, [])
    out = find_coloring(g, 5, 1)
    assert out.sat and out.certificate.colors == ()


def test_oracle_examples():
    tri = build_graph(3, [(0, 1), (0, 2), (1, 2)])
    assert oracle_enumerate(tri, 5) == 1
    assert oracle_enumerate(BOW_TIE, 5) == 1
    assert oracle_enumerate(C4, 3) == 0


def test_oracle_guard():
    g = build_graph(13, [(i, i + 1) for i in range(12)] + [(0, 12)])
    with pytest.raises(OracleSizeError):
        oracle_enumerate(g, 5)


def test_status_matches_oracle_positivity(edge_corpus):
    for m in range(7):
        for g in edge_corpus[m]:
            for k in (3, 4, 5):
                assert find_coloring(g, k).sat == (oracle_enumerate(g, k) > 0)


def test_class_enumeration_matches_oracle_counts(edge_corpus):
    for m in range(7):
        for g in edge_corpus[m][:30]:
            for k in (3, 4, 5):
                classes = iter_coloring_classes(g, k)
                assert len(classes) == oracle_enumerate(g, k)
                assert len({cg.colors for cg in classes}) == len(classes)
                for cg in classes:
                    assert is_proper(cg)
                    assert find_rainbow_path(cg, k) is None


def test_relabel_invariance(edge_corpus):
    rng = random.Random(17)
    flat = [g for m in range(4, 7) for g in edge_corpus[m] if g.n <= 8]
    rng.shuffle(flat)
    for g in flat[:40]:
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = relabel(g, perm)
        for k in (4, 5):
            assert find_coloring(g, k).sat == find_coloring(h, k).sat


def test_edge_deletion_monotonicity(edge_corpus):
    for g in edge_corpus[6][:25]:
        for k in (4, 5):
            if find_coloring(g, k).sat:
                for drop in range(len(g.edges)):
                    sub = build_graph(
                        g.n, [e for i, e in enumerate(g.edges) if i != drop]
                    )
                    assert find_coloring(sub, k).sat


def test_k_monotonicity(edge_corpus):
    for g in edge_corpus[6][:25]:
        for k in (3, 4, 5, 6):
            if find_coloring(g, k).sat:
                for k2 in range(k + 1, 8):
                    assert find_coloring(g, k2).sat


def test_determinism():
    a = find_coloring(PRISM6, 5, 9)
    b = find_coloring(PRISM6, 5, 9)
    assert a.certificate == b.certificate
    assert a.nodes == b.nodes


def test_decision_agrees_with_full_enumeration_on_refutation_instances():
    # the iterative decision search and the recursive all-solutions
    # enumerator must agree on every planar (6,10) candidate
    from rbturan.extremal import enumerate_candidates

    for g in enumerate_candidates(6, 10, planar=True).graphs:
        assert find_coloring(g, 5).status == UNSAT
        assert iter_coloring_classes(g, 5) == []


def test_max_colors_caps_search():
    # the double-wheel on 6 vertices needs 2n-2 = 10 colors; with only
    # three colors properness already fails at the degree-4 hub
    g = build_graph(6, [(4, i) for i in range(4)] + [(5, i) for i in range(4)]
                    + [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert find_coloring(g, 8, 3).status == UNSAT
    assert find_coloring(g, 8, len(g.edges)).sat

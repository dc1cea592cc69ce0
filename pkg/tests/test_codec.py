from __future__ import annotations

import itertools
import json

import networkx as nx
import pytest

from rbturan.codec import (
    CodecError,
    decode_colored,
    decode_graph6,
    encode_colored,
    encode_graph6,
)
from rbturan.generation import LevelLadder
from rbturan.graphs import build_colored_graph, build_graph


def reference_graph6(g) -> str:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return nx.to_graph6_bytes(G, header=False).decode().strip()


def test_hand_decoded_examples():
    k4 = decode_graph6("C~")
    assert k4.n == 4 and len(k4.edges) == 6
    single = decode_graph6("A_")
    assert single.n == 2 and single.edges == ((0, 1),)
    lone = decode_graph6("@")
    assert lone.n == 1 and lone.edges == ()


def test_encode_examples():
    assert encode_graph6(build_graph(4, list(itertools.combinations(range(4), 2)))) == "C~"
    assert encode_graph6(build_graph(5, [])) == "D??"


def test_header_tolerated():
    assert decode_graph6(">>graph6<<C~").n == 4


def test_sparse6_rejected_distinctly():
    with pytest.raises(CodecError, match="sparse6"):
        decode_graph6(":Fa@x^")


def test_out_of_range_character():
    with pytest.raises(CodecError, match="range"):
        decode_graph6("C!!")


def test_truncated_body():
    with pytest.raises(CodecError, match="expected"):
        decode_graph6("F??")  # n=7 needs 4 body characters


def test_size_limit():
    with pytest.raises(CodecError, match="limit"):
        decode_graph6("C~", max_n=3)
    big = build_graph(63, [])
    with pytest.raises(CodecError, match="size field"):
        encode_graph6(big)


def test_roundtrip_all_graphs_up_to_5_vertices():
    for n in range(6):
        ladder = LevelLadder(n)
        for m in range(n * (n - 1) // 2 + 1):
            for g in ladder.level(m):
                line = encode_graph6(g)
                assert decode_graph6(line) == g
                assert line == reference_graph6(g)


def test_decode_encode_identity_on_reference_lines():
    # encode(decode(line)) must reproduce the exact bytes
    for n in range(1, 7):
        G = nx.path_graph(n)
        line = nx.to_graph6_bytes(G, header=False).decode().strip()
        assert encode_graph6(decode_graph6(line)) == line


G5_TRIPLES = [
    (0, 1, 1), (0, 2, 2), (0, 3, 3), (2, 3, 4), (4, 1, 4), (4, 2, 3), (4, 3, 2),
]


def test_colored_roundtrip():
    cg = build_colored_graph(5, G5_TRIPLES)
    doc = encode_colored(cg, meta={"note": "fixture"})
    back = decode_colored(doc)
    assert back == cg
    parsed = json.loads(doc)
    assert parsed["meta"] == {"note": "fixture"}
    assert parsed["n"] == 5


def test_colored_rejects_color_zero():
    doc = json.dumps({"n": 2, "edges": [[0, 1, 0]]})
    with pytest.raises(CodecError, match="positive"):
        decode_colored(doc)


def test_colored_rejects_loop():
    doc = json.dumps({"n": 3, "edges": [[2, 2, 1]]})
    with pytest.raises(CodecError, match="loop"):
        decode_colored(doc)


def test_colored_rejects_malformed():
    with pytest.raises(CodecError, match="JSON"):
        decode_colored("{not json")
    with pytest.raises(CodecError, match="missing"):
        decode_colored(json.dumps({"n": 2}))
    with pytest.raises(CodecError, match="entry"):
        decode_colored(json.dumps({"n": 2, "edges": [[0, 1]]}))


def test_encode_colored_is_deterministic():
    cg = build_colored_graph(5, G5_TRIPLES)
    assert encode_colored(cg) == encode_colored(cg)

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs, random_graph
from regclique import Graph6Error, complete_graph, emit_graph6, from_edge_list, icosahedron, parse_graph6
from regclique.graph6 import read_graph6_lines


def test_hand_decoded_example():
    # 'D' -> n = 5; '?' = 000000 and '{' = 111100: x04 x14 x24 x34 set, two pad bits
    g = parse_graph6("D?{")
    assert g == from_edge_list(5, [(0, 4), (1, 4), (2, 4), (3, 4)])
    assert emit_graph6(g) == "D?{"


def test_single_vertex():
    assert emit_graph6(complete_graph(1)) == "@"
    assert parse_graph6("@").n == 1


def test_header_accepted():
    g = icosahedron()
    text = emit_graph6(g, header=True)
    assert text.startswith(">>graph6<<")
    assert parse_graph6(text + "\n") == g


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("", "truncated"),
        ("D?", "truncated"),
        ("D?}", "padding"),
        ("D?{?", "trailing"),
        ("D ?{", "outside 63..126"),
        ("~??", "truncated"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(Graph6Error, match=fragment):
        parse_graph6(text)


def test_error_position():
    with pytest.raises(Graph6Error) as info:
        parse_graph6("D?}")
    assert info.value.position == 2
    assert "at byte 2" in str(info.value)


def test_matches_networkx_encoder(rng):
    # networkx is an independent encoder for the same format
    for n in (1, 2, 5, 13, 62, 63, 70):
        g = random_graph(rng, n, 0.4)
        ng = nx.Graph()
        ng.add_nodes_from(range(n))
        ng.add_edges_from(g.edges())
        expected = nx.to_graph6_bytes(ng, header=False).decode().strip()
        assert emit_graph6(g) == expected


def test_large_n_round_trip(rng):
    g = random_graph(rng, 130, 0.05)
    text = emit_graph6(g)
    assert text[0] == "~"
    assert parse_graph6(text) == g


def test_read_lines(tmp_path):
    path = tmp_path / "two.g6"
    path.write_text("D?{\n\n@\n")
    with path.open() as fh:
        gs = list(read_graph6_lines(fh))
    assert [g.n for g in gs] == [5, 1]


@given(graphs(max_n=20))
@settings(max_examples=200, deadline=None)
def test_round_trip(g):
    text = emit_graph6(g)
    assert parse_graph6(text) == g
    assert emit_graph6(parse_graph6(text)) == text

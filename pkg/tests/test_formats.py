import networkx as nx
import pytest
from hypothesis import given, settings

from cycleramsey.errors import ParseError
from cycleramsey.formats import from_edgelist, from_graph6, read_graph, to_edgelist, to_graph6
from cycleramsey.graph import Graph, complete_graph, empty_graph, petersen_graph

from conftest import graphs, to_nx


def test_edgelist_layout():
    assert to_edgelist(Graph(3, [(1, 2), (0, 1)])) == "3 2\n0 1\n1 2\n"


def test_empty_graph_edgelist():
    assert from_edgelist("4 0\n") == empty_graph(4)


@settings(max_examples=100)
@given(graphs(max_n=12))
def test_edgelist_round_trip(g):
    assert from_edgelist(to_edgelist(g)) == g


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=12))
def test_graph6_matches_networkx(g):
    text = to_graph6(g)
    assert text == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert from_graph6(text) == g


def test_graph6_known_strings():
    assert to_graph6(petersen_graph()) == "IheA@GUAo"
    assert to_graph6(complete_graph(4)) == "C~"
    assert from_graph6(">>graph6<<C~") == complete_graph(4)


def test_graph6_large_order():
    g = Graph(70, [(0, 69)])
    assert from_graph6(to_graph6(g)) == g
    assert to_graph6(g).startswith("~")


def test_read_graph_detects_format():
    g = petersen_graph()
    assert read_graph(to_edgelist(g)) == g
    assert read_graph(to_graph6(g) + "\n") == g


@pytest.mark.parametrize("text", [
    "",
    "3\n",
    "3 1\n0 x\n",
    "3 2\n0 1\n",
    "3 1\n0 1 2\n",
    "3 1\n0 3\n",
    "3 1\n1 1\n",
    "3 2\n0 1\n1 0\n",
])
def test_bad_edgelists(text):
    with pytest.raises(ParseError):
        from_edgelist(text)


@pytest.mark.parametrize("text", ["", "C", "C~~", "C\x7f", "~?"])
def test_bad_graph6(text):
    with pytest.raises(ParseError):
        from_graph6(text)


def test_graph6_nonzero_padding():
    # K_2 has one data bit; setting a padding bit must be rejected
    with pytest.raises(ParseError):
        from_graph6("A" + chr(63 + 0b110000))


def test_unrecognised():
    with pytest.raises(ParseError):
        read_graph("a b c\n")

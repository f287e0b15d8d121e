import random

from hypothesis import given, settings
import networkx as nx
import pytest

from domforce import families as fam
from domforce.graph import (
    Graph,
    GraphError,
    VertexSet,
    components,
    induced_connected,
    is_connected,
    is_dominating,
    neighbors,
)
from domforce.io import from_edge_list, from_graph6, read_graph, to_dot, to_edge_list, to_graph6

from conftest import graph_and_set, graphs


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_neighbors_examples():
    assert neighbors(fam.path(3), 1) == VertexSet.of([0, 2])
    assert neighbors(fam.complete(4), 0) == VertexSet.of([1, 2, 3])
    assert neighbors(fam.cycle(5), 0) == VertexSet.of([1, 4])
    with pytest.raises(IndexError):
        neighbors(fam.path(3), 3)


def test_connectivity_examples():
    c5 = fam.cycle(5)
    assert induced_connected(c5, VertexSet.of([0, 1, 2]))
    assert not induced_connected(c5, VertexSet.of([0, 2]))
    for v in range(5):
        assert induced_connected(c5, VertexSet.of([v]))
    assert not induced_connected(c5, VertexSet())


def test_dominating_examples():
    c5 = fam.cycle(5)
    assert is_dominating(c5, VertexSet.of([0, 1, 2]))
    assert is_dominating(c5, VertexSet.full(5))
    assert not is_dominating(c5, VertexSet.of([0]))


def test_graph_rejects_bad_adjacency():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))  # asymmetric
    with pytest.raises(GraphError):
        Graph(1, (0b1,))  # loop
    with pytest.raises(GraphError):
        Graph(2, (0b100, 0))  # out of range
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 0)])


def test_vertex_set_algebra():
    a, b = VertexSet.of([0, 2, 5]), VertexSet.of([2, 3])
    assert (a | b).to_list() == [0, 2, 3, 5]
    assert (a & b).to_list() == [2]
    assert (a - b).to_list() == [0, 5]
    assert a.complement(6).to_list() == [1, 3, 4]
    assert len(a) == 3 and 5 in a and 1 not in a
    assert list(VertexSet.of([7, 1, 4])) == [1, 4, 7]


@given(graphs())
def test_induced_connected_on_all_vertices(g):
    assert induced_connected(g, VertexSet.full(g.n)) == is_connected(g)
    assert is_connected(g) == nx.is_connected(_nx(g))
    assert len(components(g)) == nx.number_connected_components(_nx(g))


@given(graph_and_set(), graph_and_set())
def test_domination_monotone(gs, extra):
    g, s = gs
    s, t = VertexSet(s), VertexSet(s | (extra[1] & g.full))
    if is_dominating(g, s):
        assert is_dominating(g, t)


@given(graph_and_set())
def test_domination_matches_networkx(gs):
    g, s = gs
    if s:
        assert is_dominating(g, VertexSet(s)) == nx.is_dominating_set(_nx(g), VertexSet(s).to_list())


def test_graph6_fixed_vectors():
    assert from_graph6("A_") == fam.complete(2)
    assert from_graph6("Bg") == fam.path(3)
    assert to_graph6(fam.complete(2)) == "A_"
    assert to_graph6(fam.path(3)) == "Bg"
    assert from_graph6(">>graph6<<Bg") == fam.path(3)


def test_graph6_roundtrip_random_corpus():
    rng = random.Random("graph6")
    for _ in range(150):
        n = rng.randint(0, 30)
        g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.3])
        text = to_graph6(g)
        assert from_graph6(text) == g
        assert to_graph6(from_graph6(text)) == text
        assert text == nx.to_graph6_bytes(_nx(g), header=False).decode().strip()


def test_graph6_large_order_header():
    g = fam.cycle(100)
    assert to_graph6(g)[0] == "~"
    assert from_graph6(to_graph6(g)) == g


@pytest.mark.parametrize("bad", ["", "A", "A_x", "\x7fA", "Bgg", "A`"])
def test_graph6_malformed(bad):
    with pytest.raises(GraphError):
        from_graph6(bad)


def test_edge_list_roundtrip_and_errors():
    g = fam.petersen()
    assert from_edge_list(to_edge_list(g)) == g
    assert from_edge_list("0 1\n1 2\n") == fam.path(3)
    for bad in ("0 0\n", "n 2\n0 2\n", "0 1\n1 0\n", "0 1 2\n", "-1 2\n"):
        with pytest.raises(GraphError):
            from_edge_list(bad)


def test_dot_export():
    out = to_dot(fam.path(3))
    assert out.startswith("graph G {") and "0 -- 1;" in out and "1 -- 2;" in out


def test_read_graph_detects_format(tmp_path):
    a = tmp_path / "g.g6"
    a.write_text("Bg\n")
    b = tmp_path / "g.txt"
    b.write_text("0 1\n1 2\n")
    assert read_graph(a) == read_graph(b) == fam.path(3)

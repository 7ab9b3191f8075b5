from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dompoly.graph import (
    EdgeListParseError,
    Graph,
    GraphError,
    all_graphs,
    cartesian_product,
    closed_neighborhood,
    contract_vertex,
    corona_k1,
    delete_closed_neighborhood,
    delete_edge,
    delete_vertex,
    disjoint_union,
    format_edge_list,
    parse_edge_list,
    random_graph,
)

from strategies import graphs


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def test_rejects_loops_and_bad_adjacency():
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 2)])
    with pytest.raises(GraphError):
        Graph(2, (frozenset({1}), frozenset()))


def test_closed_neighborhood_and_masks():
    g = path(4)
    assert closed_neighborhood(g, 1) == {0, 1, 2}
    assert g.closed_masks() == [0b11, 0b111, 0b1110, 0b1100]
    with pytest.raises(GraphError):
        closed_neighborhood(g, 4)


def test_delete_vertex_relabels_in_order():
    g = path(4)
    h = delete_vertex(g, 1)
    # survivors 0, 2, 3 become 0, 1, 2; only the edge 2-3 survives
    assert h.order == 3
    assert list(h.edges()) == [(1, 2)]


def test_delete_closed_neighborhood_can_empty():
    star = Graph.from_edges(3, [(0, 1), (0, 2)])
    assert delete_closed_neighborhood(star, 0) == Graph.null()


def test_contraction_joins_neighbors():
    g = path(3)
    h = contract_vertex(g, 1)
    assert h.order == 2 and list(h.edges()) == [(0, 1)]


def test_delete_edge():
    g = path(3)
    h = delete_edge(g, 0, 1)
    assert list(h.edges()) == [(1, 2)]
    with pytest.raises(GraphError):
        delete_edge(g, 0, 2)


def test_products():
    k2 = path(2)
    c4 = cartesian_product(k2, k2)
    assert c4.order == 4 and c4.size == 4
    assert all(len(c4.neighbors(v)) == 2 for v in range(4))
    cor = corona_k1(path(3))
    assert cor.order == 6 and cor.size == 2 + 3
    assert cor.neighbors(3) == {0}
    u = disjoint_union(path(2), path(3))
    assert u.order == 5 and list(u.edges()) == [(0, 1), (2, 3), (3, 4)]


def test_edge_list_round_trip():
    g = Graph.from_edges(5, [(0, 1), (1, 4), (2, 3)])
    assert parse_edge_list(format_edge_list(g)) == g
    assert parse_edge_list("n 0\n") == Graph.null()


@pytest.mark.parametrize(
    "text, line",
    [
        ("", 1),
        ("m 3\n", 1),
        ("n 3\n0 1\n1 1\n", 3),
        ("n 3\n0 1\n1 0\n", 3),
        ("n 3\n0 3\n", 2),
        ("n 3\n0 x\n", 2),
        ("n 3\n0 1 2\n", 2),
    ],
)
def test_edge_list_errors_report_line(text, line):
    with pytest.raises(EdgeListParseError) as info:
        parse_edge_list(text)
    assert info.value.line == line


def test_isomorphism_class_counts():
    # number of unlabelled graphs on 0..5 vertices
    assert [len(all_graphs(n)) for n in range(6)] == [1, 1, 2, 4, 11, 34]
    assert len(all_graphs(4, up_to_isomorphism=False)) == 2 ** 6


def test_random_graph_is_seeded():
    a = random_graph(random.Random(7), 6)
    b = random_graph(random.Random(7), 6)
    assert a == b


@given(graphs())
def test_edge_list_round_trip_property(g):
    assert parse_edge_list(format_edge_list(g)) == g


@settings(max_examples=50)
@given(graphs(), st.data())
def test_deletion_preserves_remaining_edges(g, data):
    if g.order == 0:
        return
    u = data.draw(st.integers(0, g.order - 1))
    h = delete_vertex(g, u)
    assert h.size == g.size - len(g.neighbors(u))

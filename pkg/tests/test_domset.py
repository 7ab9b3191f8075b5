from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dompoly.domset import (
    CapacityError,
    EdgeRecurrenceFailure,
    domination_number,
    domination_polynomial_bruteforce as D,
    edge_recurrence_bracket,
    is_dominating,
    p_u_polynomial,
    verify_edge_recurrence,
    verify_vertex_recurrence,
)
from dompoly.graph import Graph, closed_neighborhood, disjoint_union
from dompoly.poly import ONE, X, Polynomial, divide_exact

from strategies import graphs


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def naive_dompoly(g):
    """Straight set-based enumeration, independent of the bitmask code."""
    counts = [0] * (g.order + 1)
    for k in range(g.order + 1):
        for s in combinations(range(g.order), k):
            covered = set()
            for v in s:
                covered |= closed_neighborhood(g, v)
            if len(covered) == g.order:
                counts[k] += 1
    return Polynomial(counts)


def test_small_graphs_by_hand():
    assert D(Graph.null()) == ONE
    assert D(Graph.empty(3)) == X ** 3
    assert D(cycle(3)) == Polynomial([0, 3, 3, 1])
    assert D(cycle(4)) == Polynomial([0, 0, 6, 4, 1])
    # P3: {1} plus every 2- and 3-set containing 1 or both ends
    assert D(path(3)) == Polynomial([0, 1, 3, 1])
    assert D(path(4)) == Polynomial([0, 0, 4, 4, 1])


def test_is_dominating():
    g = path(4)
    assert is_dominating(g, {1, 3})
    assert not is_dominating(g, {0, 1})
    assert is_dominating(Graph.null(), set())


def test_domination_number():
    assert domination_number(cycle(4)) == 2
    assert domination_number(path(7)) == 3
    assert domination_number(Graph.null()) == 0


def test_capacity_guard():
    with pytest.raises(CapacityError):
        D(path(12), max_order=10)
    with pytest.raises(CapacityError):
        D(path(40))


def test_workers_do_not_change_result():
    g = cycle(18)
    assert D(g, workers=4) == D(g, workers=1)


def test_p_u_on_path():
    # P3, u = end 0: G - u is the edge 1-2, sets avoiding N[0] = {0, 1}
    # must dominate {1, 2} from {2} alone
    assert p_u_polynomial(path(3), 0) == X
    # u = centre: nothing is left outside N[u], and G - u has two isolated vertices
    assert p_u_polynomial(path(3), 1) == Polynomial()


def test_edge_bracket_divisible_on_c5():
    g = cycle(5)
    bracket = edge_recurrence_bracket(g, 0, 1)
    divide_exact(bracket, X - 1)
    assert verify_edge_recurrence(g, 0, 1)


def test_edge_failure_type():
    exc = EdgeRecurrenceFailure("bad", True)
    assert exc.non_divisible and isinstance(exc, AssertionError)


@settings(max_examples=60, deadline=None)
@given(graphs(max_order=7))
def test_matches_naive_enumeration(g):
    assert D(g) == naive_dompoly(g)


@settings(max_examples=60, deadline=None)
@given(graphs(max_order=8))
def test_number_of_dominating_sets_is_odd(g):
    assert D(g)(1) % 2 == 1


@settings(max_examples=40, deadline=None)
@given(graphs(max_order=5), graphs(max_order=5))
def test_disjoint_union_multiplies(g, h):
    assert D(disjoint_union(g, h)) == D(g) * D(h)


@settings(max_examples=60, deadline=None)
@given(graphs(max_order=7))
def test_top_coefficients(g):
    d = D(g)
    if g.order == 0:
        return
    assert d.degree == g.order and d.leading == 1
    isolated = sum(1 for v in range(g.order) if not g.adjacency[v])
    assert d[g.order - 1] == g.order - isolated


@settings(max_examples=40, deadline=None)
@given(graphs(max_order=7), st.data())
def test_vertex_recurrence_property(g, data):
    if g.order == 0:
        return
    u = data.draw(st.integers(0, g.order - 1))
    assert verify_vertex_recurrence(g, u)


@settings(max_examples=40, deadline=None)
@given(graphs(max_order=7), st.data())
def test_edge_recurrence_property(g, data):
    edges = list(g.edges())
    if not edges:
        return
    u, v = data.draw(st.sampled_from(edges))
    assert verify_edge_recurrence(g, u, v)

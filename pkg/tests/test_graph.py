import math

import pytest
from hypothesis import given, settings

from conftest import graphs
from oracles import distances_by_matrix_powers, matrix
from regclique import (
    INF,
    Graph,
    GraphError,
    cartesian_product,
    complete_graph,
    cycle_graph,
    diameter,
    disjoint_union,
    distances,
    from_edge_list,
    grid,
    icosahedron,
    path_graph,
)


def test_from_edge_list_triangle():
    g = from_edge_list(3, [{0, 1}, {1, 2}, {0, 2}])
    assert g == complete_graph(3)


def test_from_edge_list_empty_and_duplicates():
    assert from_edge_list(2, []).num_edges == 0
    assert from_edge_list(4, [(0, 1), (0, 1), (1, 0)]).edges() == [(0, 1)]


@pytest.mark.parametrize("edges", [[(0, 3)], [(-1, 0)], [(1, 1)]])
def test_from_edge_list_rejects(edges):
    with pytest.raises(GraphError):
        from_edge_list(3, edges)


def test_graph_invariants_enforced():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0b00))  # asymmetric
    with pytest.raises(GraphError):
        Graph(1, (0b1,))  # loop
    with pytest.raises(GraphError):
        Graph(0, ())


@pytest.mark.parametrize("n,m", [(1, 0), (4, 6), (5, 10)])
def test_complete_graph(n, m):
    g = complete_graph(n)
    assert g.num_edges == m == n * (n - 1) // 2
    assert set(g.degrees()) == {n - 1}


def test_complete_graph_zero():
    with pytest.raises(GraphError):
        complete_graph(0)


def test_cartesian_k2_k2_is_4_cycle():
    g = cartesian_product(complete_graph(2), complete_graph(2))
    # brute force: (a, b) ~ (a', b') iff exactly one coordinate differs
    for u in range(4):
        for v in range(4):
            a, b, a2, b2 = u // 2, u % 2, v // 2, v % 2
            assert g.has_edge(u, v) == ((a == a2) != (b == b2))
    assert set(g.degrees()) == {2} and g.num_edges == 4


def test_cartesian_k1_identity():
    h = icosahedron()
    assert cartesian_product(complete_graph(1), h) == h


def test_cartesian_degree_law():
    g, h = path_graph(4), cycle_graph(5)
    gh = cartesian_product(g, h)
    for a in range(g.n):
        for b in range(h.n):
            assert gh.degree(a * h.n + b) == g.degree(a) + h.degree(b)


@given(graphs(max_n=5), graphs(max_n=5))
@settings(max_examples=60, deadline=None)
def test_cartesian_degree_law_property(g, h):
    gh = cartesian_product(g, h)
    assert gh.degrees() == [g.degree(a) + h.degree(b) for a in range(g.n) for b in range(h.n)]


def test_grid():
    assert grid(3) == cartesian_product(complete_graph(3), complete_graph(3))
    assert grid(3).n == 9 and set(grid(3).degrees()) == {4}
    # (0,0) (0,1) (1,0) (1,1): pairs differing in exactly one coordinate
    assert grid(2).edges() == [(0, 1), (0, 2), (1, 3), (2, 3)]
    with pytest.raises(GraphError):
        grid(1)


def test_icosahedron_shape():
    g = icosahedron()
    assert g.n == 12 and g.num_edges == 30 and set(g.degrees()) == {5}
    for u, v in g.edges():
        assert (g.adj[u] & g.adj[v]).bit_count() == 2
    d = distances(g)
    for x in range(12):
        assert len(d.at_distance(x, 3)) == 1
    antipode = {x: d.at_distance(x, 3)[0] for x in range(12)}
    assert antipode == {0: 11, 1: 9, 2: 10, 3: 6, 4: 7, 5: 8, 11: 0, 9: 1, 10: 2, 6: 3, 7: 4, 8: 5}


def test_disjoint_union():
    g = disjoint_union([complete_graph(3), complete_graph(3)])
    assert g.n == 6 and g.num_edges == 6 and diameter(g) == INF
    assert disjoint_union([icosahedron()]) == icosahedron()
    matching = disjoint_union([complete_graph(2)] * 3)
    assert matching.edges() == [(0, 1), (2, 3), (4, 5)]
    mixed = disjoint_union([complete_graph(2), complete_graph(3)])
    assert mixed.edges() == [(0, 1), (2, 3), (2, 4), (3, 4)]
    with pytest.raises(GraphError):
        disjoint_union([])


def test_distances_examples():
    assert all(distances(complete_graph(4))[u, v] == 1 for u in range(4) for v in range(4) if u != v)
    assert distances(path_graph(3))[0, 2] == 2
    assert distances(icosahedron()).max_finite() == 3


def test_diameter_examples():
    assert diameter(icosahedron()) == 3
    assert diameter(complete_graph(5)) == 1
    assert diameter(disjoint_union([complete_graph(2), complete_graph(2)])) == math.inf


@given(graphs(max_n=10))
@settings(max_examples=100, deadline=None)
def test_distances_match_matrix_powers(g):
    assert [list(row) for row in distances(g).dist] == distances_by_matrix_powers(matrix(g))


@given(graphs(max_n=8))
@settings(max_examples=50, deadline=None)
def test_distance_table_invariants(g):
    d = distances(g)
    for u in range(g.n):
        assert d[u, u] == 0
        for v in range(g.n):
            assert d[u, v] == d[v, u]
            assert (d[u, v] == 1) == g.has_edge(u, v)
            for w in range(g.n):
                if d[u, v] != INF and d[v, w] != INF:
                    assert d[u, w] <= d[u, v] + d[v, w]

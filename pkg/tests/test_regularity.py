import pytest
from hypothesis import given, settings

from conftest import graphs
from oracles import intersection_census, matrix, mu_set
from regclique import (
    INF,
    NotCertified,
    diameter,
    antipodal_classes,
    cartesian_product,
    common_neighbour_count,
    complete_graph,
    cycle_graph,
    disjoint_union,
    edge_regular_params,
    from_edge_list,
    grid,
    icosahedron,
    intersection_array,
    is_taylor,
    mu_multiset,
    path_graph,
    regular_degree,
    strongly_regular_params,
)
from regclique.regularity import (
    certify_antipodal,
    certify_distance_regular,
    certify_edge_regular,
    certify_regular,
    certify_strongly_regular,
    mu_census,
)

K4_MINUS_EDGE = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])


def array_from_census(census):
    d = max(i for i, _ in census)
    assert all(len(vals) == 1 for vals in census.values())
    b = tuple(next(iter(census[i, "b"])) for i in range(d))
    c = tuple(next(iter(census[i, "c"])) for i in range(1, d + 1))
    return d, b, c


def test_regular_degree():
    assert regular_degree(icosahedron()) == 5
    assert regular_degree(grid(4)) == 6
    assert regular_degree(K4_MINUS_EDGE) is None
    with pytest.raises(NotCertified) as info:
        certify_regular(K4_MINUS_EDGE)
    assert info.value.witness == (0, 1)


def test_edge_regular_examples():
    assert edge_regular_params(icosahedron()).params == (12, 5, 2)
    assert edge_regular_params(grid(3)).params == (9, 4, 1)
    assert edge_regular_params(K4_MINUS_EDGE) is None


def test_edge_regular_witness_on_prism():
    # triangular prism K3 x K2 is 3-regular; rung (0,1) has 0 common neighbours, triangle edge (0,2) has 1
    prism = cartesian_product(complete_graph(3), complete_graph(2))
    with pytest.raises(NotCertified) as info:
        certify_edge_regular(prism)
    assert info.value.witness == ((0, 1), (0, 2))


def test_edge_regular_needs_an_edge():
    assert edge_regular_params(from_edge_list(3, [])) is None


def test_complete_graph_is_edge_regular_not_srg():
    assert edge_regular_params(complete_graph(5)).params == (5, 4, 3)
    assert strongly_regular_params(complete_graph(5)) is None
    assert mu_multiset(complete_graph(4)) == frozenset()


def test_disconnected_edge_regular():
    g = disjoint_union([complete_graph(3)] * 2)
    assert edge_regular_params(g).params == (6, 2, 1)
    assert intersection_array(g) is None


@pytest.mark.parametrize("q", [3, 4, 5, 6])
def test_grid_srg(q):
    assert strongly_regular_params(grid(q)).params == (q * q, 2 * (q - 1), q - 2, 2)


def test_icosahedron_not_srg():
    assert strongly_regular_params(icosahedron()) is None
    with pytest.raises(NotCertified) as info:
        certify_strongly_regular(icosahedron())
    (p1, p2) = info.value.witness
    g = icosahedron()
    assert common_neighbour_count(g, *p1) != common_neighbour_count(g, *p2)


def test_common_neighbour_count():
    assert common_neighbour_count(complete_graph(4), 0, 3) == 2
    ico = icosahedron()
    assert common_neighbour_count(ico, 0, 11) == 0
    assert common_neighbour_count(ico, 0, 1) == 2
    with pytest.raises(ValueError):
        common_neighbour_count(ico, 3, 3)


def test_mu_multiset_examples():
    assert mu_multiset(grid(3)) == {2}
    assert mu_multiset(icosahedron()) == {0, 2}
    assert mu_multiset(complete_graph(4)) == set()
    assert mu_census(icosahedron()) == {0: 6, 2: 30}


@given(graphs(max_n=10))
@settings(max_examples=150, deadline=None)
def test_mu_multiset_matches_double_loop(g):
    assert mu_multiset(g) == mu_set(matrix(g))


@given(graphs(max_n=9))
@settings(max_examples=150, deadline=None)
def test_hierarchy_properties(g):
    er = edge_regular_params(g)
    srg = strongly_regular_params(g)
    if srg is not None:
        assert er is not None and er.params == srg.params[:3]
        assert srg.k * (srg.k - srg.lam - 1) == (srg.v - srg.k - 1) * srg.mu
    assert (srg is not None) == (er is not None and len(mu_multiset(g)) == 1 and not g.is_complete())
    ia = intersection_array(g)
    if ia is not None:
        assert er is not None and er.lam == ia.a[0]
        b1 = ia.b[1] if ia.d > 1 else 0
        assert er.lam == ia.k - b1 - 1


@given(graphs(max_n=9))
@settings(max_examples=150, deadline=None)
def test_intersection_array_matches_census(g):
    census = intersection_census(matrix(g))
    ia = intersection_array(g)
    if diameter(g) == INF or g.n == 1 or not all(len(v) == 1 for v in census.values()):
        assert ia is None
    else:
        assert (ia.d, ia.b, ia.c) == array_from_census(census)


def test_intersection_array_examples():
    assert str(intersection_array(icosahedron())) == "{5,2,1;1,2,5}"
    # census oracle gives b_1 = 2 for the 3x3 grid
    ia = intersection_array(grid(3))
    assert (ia.d, ia.b, ia.c) == (2, (4, 2), (1, 2))
    assert array_from_census(intersection_census(matrix(grid(3)))) == (2, (4, 2), (1, 2))
    assert intersection_array(path_graph(3)) is None
    assert str(intersection_array(cycle_graph(6))) == "{2,1,1;1,1,2}"


def test_intersection_array_lambda_is_a1():
    for g in (icosahedron(), grid(4), cycle_graph(7)):
        ia = intersection_array(g)
        assert edge_regular_params(g).lam == ia.a[0] == ia.k - ia.b[1] - 1


def test_distance_regular_witness():
    with pytest.raises(NotCertified) as info:
        certify_distance_regular(path_graph(3))
    assert info.value.witness[0] in {"a", "b", "c"}


def test_antipodal_examples():
    cert = antipodal_classes(icosahedron())
    assert cert.a == 2
    assert cert.classes == ((0, 11), (1, 9), (2, 10), (3, 6), (4, 7), (5, 8))
    c6 = antipodal_classes(cycle_graph(6))
    assert c6.a == 2 and c6.classes == ((0, 3), (1, 4), (2, 5))
    assert antipodal_classes(grid(3)) is None


def test_antipodal_grid_witness_triple():
    g = grid(3)
    with pytest.raises(NotCertified) as info:
        certify_antipodal(g)
    x, y, z = info.value.witness
    # brute force: nonadjacent distinct means distance 2 (the diameter) in the 3x3 grid
    related = lambda p, q: p == q or not g.has_edge(p, q)  # noqa: E731
    assert related(x, y) and related(y, z) and not related(x, z)
    assert (x, y, z) == (0, 4, 2)


def test_antipodal_errors_and_size_one():
    with pytest.raises(ValueError):
        antipodal_classes(disjoint_union([complete_graph(2)] * 2))
    with pytest.raises(ValueError):
        antipodal_classes(complete_graph(4))
    # C5: each vertex has two vertices at distance 2, relation not transitive
    assert antipodal_classes(cycle_graph(5)) is None
    # path 0-1-2: classes {0,2} and {1} have unequal sizes
    assert antipodal_classes(path_graph(3)) is None


def test_antipodal_partition_property():
    for g in (icosahedron(), cycle_graph(6), cycle_graph(8)):
        cert = antipodal_classes(g)
        flat = sorted(x for c in cert.classes for x in c)
        assert flat == list(range(g.n))
        assert all(len(c) == cert.a for c in cert.classes)


def test_is_taylor():
    assert is_taylor(icosahedron())
    assert not is_taylor(grid(3))
    assert not is_taylor(complete_graph(4))
    # C6 is 2-antipodal distance-regular of diameter 3
    assert is_taylor(cycle_graph(6))

import random

import pytest

from conftest import random_connected_graph
from oracles import count_reduced_closed_paths_exhaustive, count_spanning_trees_exhaustive
from graphzeta.errors import GraphError
from graphzeta.graphs import (
    SerreGraph,
    adjacency_and_degree,
    connected,
    euler_characteristic,
    ihara_zeta_reciprocal,
    reduced_closed_path_counts,
    spanning_tree_count,
    validate_graph,
    zeta_reciprocal_series,
    zeta_series_from_counts,
)
from graphzeta.poly import TruncSeries, UniPoly
from graphzeta.tower import TowerDatum, build_level_graph


def _double_edge_cover(level=2):
    g = SerreGraph.from_edges(["v1", "v2"], [("v1", "v2"), ("v1", "v2")])
    d = TowerDatum(g, 2, (1, -1, 2, -2), (None, 1))
    return build_level_graph(d, level).graph


def test_minimal_graph_valid():
    g = SerreGraph.from_edges(["v1", "v2"], [("v1", "v2")])
    validate_graph(g)
    assert g.n_edges == 1


def test_fixed_point_inversion_rejected():
    g = SerreGraph(("v",), (0, 0), (0, 0), (0, 1))
    with pytest.raises(GraphError, match="fixed point"):
        validate_graph(g)


def test_incidence_mismatch_rejected():
    g = SerreGraph(("a", "b", "c"), (0, 1, 1, 2), (1, 0, 2, 0), (1, 0, 3, 2))
    with pytest.raises(GraphError, match="incidence"):
        validate_graph(g)


def test_cover_graph_valid():
    y = _double_edge_cover()
    validate_graph(y)
    assert y.n_vertices == 6
    assert y.n_edges == 8


def test_euler_characteristic():
    assert euler_characteristic(SerreGraph(("v",), (), (), ())) == 1
    base = SerreGraph.from_edges(["v1", "v2"], [("v1", "v2"), ("v1", "v2")])
    assert euler_characteristic(base) == 0
    assert euler_characteristic(_double_edge_cover()) == -2


def test_adjacency_and_degree():
    base = SerreGraph.from_edges(["v1", "v2"], [("v1", "v2"), ("v1", "v2")])
    a, deg = adjacency_and_degree(base)
    assert a == [[0, 2], [2, 0]]
    assert deg == [[2, 0], [0, 2]]

    loop = SerreGraph.from_edges(["v"], [("v", "v")])
    a, deg = adjacency_and_degree(loop)
    assert a == [[2]]
    assert deg == [[2]]

    y = _double_edge_cover()
    ay, dy = adjacency_and_degree(y)
    # recount the darts directly
    for i in range(6):
        assert dy[i][i] == sum(1 for e in range(y.n_darts) if y.dart_origin[e] == i)
        for j in range(6):
            assert ay[i][j] == sum(
                1
                for e in range(y.n_darts)
                if y.dart_origin[e] == j and y.dart_terminus[e] == i
            )
    assert ay == [list(row) for row in zip(*ay)]


def test_connected():
    two_parts = SerreGraph.from_edges(["a", "b", "c"], [("b", "c")])
    assert not connected(two_parts)
    assert connected(_double_edge_cover())
    assert connected(_double_edge_cover(level=1))


def test_spanning_trees_triangle():
    k3 = SerreGraph.from_edges(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")])
    assert spanning_tree_count(k3) == 3
    assert count_spanning_trees_exhaustive(k3) == 3


def test_spanning_trees_cover_against_enumeration():
    y = _double_edge_cover()
    assert spanning_tree_count(y) == 32
    assert count_spanning_trees_exhaustive(y) == 32
    four_cycle = _double_edge_cover(level=1)
    assert spanning_tree_count(four_cycle) == 4
    assert count_spanning_trees_exhaustive(four_cycle) == 4


def test_spanning_tree_minor_independence():
    y = _double_edge_cover()
    a, deg = adjacency_and_degree(y)
    n = y.n_vertices
    from graphzeta.linalg import det_int

    values = set()
    for drop in range(n):
        keep = [i for i in range(n) if i != drop]
        minor = [[deg[i][j] - a[i][j] for j in keep] for i in keep]
        values.add(det_int(minor))
    assert values == {32}


def test_disconnected_spanning_trees_error():
    g = SerreGraph.from_edges(["a", "b", "c"], [("b", "c")])
    with pytest.raises(GraphError, match="not connected"):
        spanning_tree_count(g)


def test_path_counts_tree_all_zero():
    tree = SerreGraph.from_edges(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert reduced_closed_path_counts(tree, 8) == [0] * 8


def test_path_counts_triangle():
    k3 = SerreGraph.from_edges(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")])
    counts = reduced_closed_path_counts(k3, 6)
    assert counts[2] == 6  # N_3: two directed triangles, three basepoints each
    assert counts[2] == count_reduced_closed_paths_exhaustive(k3, 3)


def test_path_counts_match_exhaustive_enumeration():
    rng = random.Random(31)
    checked = 0
    while checked < 6:
        g = random_connected_graph(rng, 4, 4)
        if g.n_darts == 0 or g.n_darts > 8:
            continue
        checked += 1
        counts = reduced_closed_path_counts(g, 7)
        for k in range(1, 8):
            assert counts[k - 1] == count_reduced_closed_paths_exhaustive(g, k)


def test_ihara_zeta_reciprocal_golden():
    # isolated vertex: the 1x1 determinant is 1 - u^2, and the zeta itself
    # is exactly 1 because chi = 1 cancels it
    single = SerreGraph(("v",), (), (), ())
    h, chi = ihara_zeta_reciprocal(single)
    assert h == UniPoly([1, 0, -1]) and chi == 1
    assert zeta_reciprocal_series(h, chi, 8) == TruncSeries([1], 8)

    empty = SerreGraph((), (), (), ())
    h_empty, chi_empty = ihara_zeta_reciprocal(empty)
    assert h_empty == UniPoly([1]) and chi_empty == 0

    y = _double_edge_cover()
    h, chi = ihara_zeta_reciprocal(y)
    assert list(h.coeffs) == [1, 0, 2, 0, -9, 0, -20, 0, -1, 0, 18, 0, 9]
    assert chi == -2

    base = SerreGraph.from_edges(["v1", "v2"], [("v1", "v2"), ("v1", "v2")])
    h, chi = ihara_zeta_reciprocal(base)
    assert list(h.coeffs) == [1, 0, -2, 0, 1]  # (1 - u^2)^2
    assert chi == 0


def test_zeta_series_identity_on_cover():
    y = _double_edge_cover()
    h, chi = ihara_zeta_reciprocal(y)
    counts = reduced_closed_path_counts(y, 12)
    lhs = zeta_series_from_counts(counts, 13)
    rhs = zeta_reciprocal_series(h, chi, 13).inverse()
    assert lhs == rhs


def test_zeta_series_identity_random_small():
    rng = random.Random(47)
    done = 0
    while done < 8:
        g = random_connected_graph(rng, 5, 6)
        if g.n_darts > 12:
            continue
        done += 1
        h, chi = ihara_zeta_reciprocal(g)
        counts = reduced_closed_path_counts(g, 12)
        assert zeta_series_from_counts(counts, 13) == zeta_reciprocal_series(h, chi, 13).inverse()


def test_hashimoto_identity_random():
    rng = random.Random(53)
    for _ in range(30):
        g = random_connected_graph(rng, 6, 8)
        h, chi = ihara_zeta_reciprocal(g)
        assert h.derivative()(1) == -2 * chi * spanning_tree_count(g)

import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import connected_edge_lists
from geoprod.errors import Disconnected, OutOfRange, ParseError, SelfLoop
from geoprod.families import cycle, make_family, path, wheel
from geoprod.graph import VertexSet, build_graph, format_edge_list, neighbors, parse_edge_list
from oracles import dfs_shortest, distances


def test_k2_and_p4():
    k2 = build_graph(2, [(0, 1)])
    assert k2.edge_count == 1 and k2.distances.diameter == 1
    p4 = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert p4.distances.diameter == 3


def test_construction_errors():
    with pytest.raises(Disconnected):
        build_graph(4, [(0, 1), (2, 3)])
    with pytest.raises(OutOfRange):
        build_graph(3, [(0, 3)])
    with pytest.raises(SelfLoop):
        build_graph(3, [(0, 1), (1, 1), (1, 2)])
    with pytest.raises(OutOfRange):
        build_graph(0, [])


def test_duplicates_collapse_and_k1():
    G = build_graph(3, [(0, 1), (1, 0), (1, 2), (0, 1)])
    assert G.edge_count == 2
    K1 = build_graph(1, [])
    assert K1.distances.diameter == 0 and K1.distances.radius == 0


def test_distance_examples():
    c6 = make_family(cycle(6)).distances
    assert c6.dist[0, 3] == 3 and c6.diameter == 3 and c6.radius == 3
    p4 = make_family(path(4)).distances
    assert list(p4.ecc) == [3, 2, 2, 3] and p4.radius == 2
    w = make_family(wheel(6))
    assert w.distances.diameter == 2
    assert all(w.dist(u, v) <= 2 for u, v in itertools.combinations(range(1, 6), 2))


def test_distance_matrix_is_read_only():
    D = make_family(path(3)).distances.dist
    with pytest.raises(ValueError):
        D[0, 1] = 5


def test_neighbors():
    from geoprod.families import complete

    assert neighbors(make_family(complete(4)), 0).to_list() == [1, 2, 3]
    assert neighbors(make_family(path(4)), 1).to_list() == [0, 2]
    assert neighbors(make_family(cycle(5)), 0).to_list() == [1, 4]
    with pytest.raises(OutOfRange):
        neighbors(make_family(path(4)), 4)


@settings(max_examples=60, deadline=None)
@given(connected_edge_lists(max_n=12))
def test_metric_axioms_and_bfs_oracle(data):
    n, edges = data
    G = build_graph(n, edges)
    D = G.distances.dist
    assert D.tolist() == distances(n, edges)
    for u, v, w in itertools.product(range(n), repeat=3):
        assert D[u, v] <= D[u, w] + D[w, v]
    for u, v in itertools.product(range(n), repeat=2):
        assert D[u, v] == D[v, u]
        assert (D[u, v] == 0) == (u == v)
        assert (D[u, v] == 1) == G.adjacent(u, v)
    ecc = G.distances.ecc
    assert list(ecc) == [int(D[v].max()) for v in range(n)]
    assert G.distances.diameter == max(ecc) and G.distances.radius == min(ecc)


@settings(max_examples=25, deadline=None)
@given(connected_edge_lists(max_n=8))
def test_distances_match_path_enumeration(data):
    n, edges = data
    G = build_graph(n, edges)
    for u, v in itertools.combinations(range(n), 2):
        assert G.dist(u, v) == dfs_shortest(n, edges, u, v)


@settings(max_examples=25, deadline=None)
@given(connected_edge_lists(min_n=2, max_n=10))
def test_distances_match_networkx(data):
    n, edges = data
    nxg = nx.Graph(edges)
    nxg.add_nodes_from(range(n))
    G = build_graph(n, edges)
    for u, row in nx.all_pairs_shortest_path_length(nxg):
        for v, d in row.items():
            assert G.dist(u, v) == d


sets = st.integers(1, 70).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(st.integers(0, n - 1)), st.sets(st.integers(0, n - 1)))
)


@given(sets)
def test_vertex_set_algebra(data):
    n, a, b = data
    A, B = VertexSet.of(n, a), VertexSet.of(n, b)
    assert len(A | B) + len(A & B) == len(A) + len(B)
    assert set(A | B) == a | b and set(A & B) == a & b and set(A - B) == a - b
    assert set(A ^ B) == a ^ b
    assert set(~A) == set(range(n)) - a
    assert (A <= B) == (a <= b)
    assert A.to_list() == sorted(a)
    assert (A | B) == (B | A) and hash(A | B) == hash(B | A)


def test_vertex_set_bounds():
    with pytest.raises(OutOfRange):
        VertexSet.of(3, [3])
    assert VertexSet.full(4).is_full() and not VertexSet.empty(4)
    assert VertexSet.empty(3).add(2).to_list() == [2]


def test_edge_list_round_trip():
    G = make_family(cycle(5))
    text = format_edge_list(G)
    assert text.startswith("5 5\n")
    H = parse_edge_list(text)
    assert H.edges() == G.edges()
    assert parse_edge_list(text.rstrip("\n")).edges() == G.edges()


@pytest.mark.parametrize("text", [
    "",
    "3 2\n0 1\n",
    "3 1\n0 1\n1 2\n",
    "3 2\n0 1\n1 2\njunk\n",
    "3 2\n0 1\n1 x\n",
    "3 2\n0 1 2\n1 2\n",
    "3 2\n0 1\n1 2\n\n",
])
def test_edge_list_rejects_junk(text):
    with pytest.raises(ParseError):
        parse_edge_list(text)

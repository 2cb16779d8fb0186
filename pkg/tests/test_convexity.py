import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import connected_edge_lists
from geoprod.convexity import (
    IntervalTable,
    closure,
    closure_power,
    condition_A,
    condition_B,
    convex_hull,
    interval,
    is_convex,
    is_extreme_geodesic,
    is_geodetic,
    is_hull,
    isolated_members,
    simplicial_vertices,
)
from geoprod.errors import EmptySet, OutOfRange, TooSmall
from geoprod.families import complete, cycle, make_family, path, tree
from geoprod.graph import VertexSet, build_graph
from geoprod.product import strong_product
from oracles import Naive


def table(spec):
    return IntervalTable(make_family(spec))


def vs(n, items):
    return VertexSet.of(n, items)


def test_interval_examples():
    assert interval(table(path(4)), 0, 3).to_list() == [0, 1, 2, 3]
    assert interval(table(cycle(4)), 0, 2).to_list() == [0, 1, 2, 3]
    assert interval(table(cycle(5)), 0, 2).to_list() == [0, 1, 2]
    with pytest.raises(OutOfRange):
        interval(table(cycle(5)), 0, 5)


def test_closure_examples():
    assert closure(table(cycle(6)), vs(6, [0, 3])).is_full()
    assert closure(table(cycle(5)), vs(5, [0, 2])).to_list() == [0, 1, 2]
    T = table(path(5))
    assert closure(T, VertexSet.full(5)).is_full()
    with pytest.raises(EmptySet):
        closure(T, VertexSet.empty(5))


def test_hull_examples():
    trace = convex_hull(table(cycle(5)), vs(5, [0, 2]))
    assert trace.hull.to_list() == [0, 1, 2] and trace.iterations == 1
    P = strong_product(make_family(cycle(5)), make_family(cycle(7)))
    T = IntervalTable(P.graph)
    assert convex_hull(T, P.vertex_set([(0, 0), (1, 3)])).hull.is_full()
    Q = strong_product(make_family(path(2)), make_family(cycle(4)))
    assert convex_hull(IntervalTable(Q.graph), Q.vertex_set([(0, 0), (0, 2)])).hull.is_full()


def test_predicates_examples():
    T = table(cycle(7))
    S = vs(7, [0, 1, 3])
    naive = Naive(7, make_family(cycle(7)).edges())
    assert is_geodetic(T, S) == (naive.closure([0, 1, 3]) == naive.V)
    K = table(complete(5))
    assert is_geodetic(K, VertexSet.full(5))
    assert not any(is_geodetic(K, vs(5, c)) for c in itertools.combinations(range(5), 4))
    assert is_convex(T, VertexSet.full(7))
    with pytest.raises(EmptySet):
        is_hull(T, VertexSet.empty(7))


def test_simplicial_and_extreme_geodesic():
    assert simplicial_vertices(make_family(path(4))).to_list() == [0, 3]
    for n in range(4, 9):
        assert not simplicial_vertices(make_family(cycle(n)))
    assert is_extreme_geodesic(make_family(tree([(0, 1), (1, 2), (1, 3), (3, 4)])))
    assert not is_extreme_geodesic(make_family(cycle(5)))
    P = strong_product(make_family(path(3)), make_family(complete(2)))
    assert is_extreme_geodesic(P.graph)


def test_condition_a_examples():
    assert condition_A(table(cycle(8)), vs(8, [0, 1, 4, 5]))
    assert condition_A(table(cycle(9)), vs(9, [0, 1, 4, 5, 6]))
    T = table(cycle(6))
    assert not condition_A(T, vs(6, [0, 3]))
    assert not condition_A(T, vs(6, [2]))


def test_condition_b_examples():
    T = table(path(6))
    for u, v in itertools.combinations(range(6), 2):
        assert condition_B(T, vs(6, [u, v]))
    C = table(cycle(7))
    for size in (2, 3, 4):
        assert all(condition_B(C, vs(7, c)) for c in itertools.combinations(range(7), size))
    # every member of {0,1,4,5} in C_8 lies in an interval of the other three
    C8 = table(cycle(8))
    assert isolated_members(C8, vs(8, [0, 1, 4, 5])) == []
    assert not condition_B(C8, vs(8, [0, 1, 4, 5]))
    with pytest.raises(TooSmall):
        condition_B(C, vs(7, [0]))


@settings(max_examples=40, deadline=None)
@given(connected_edge_lists(max_n=9))
def test_intervals_match_oracle(data):
    n, edges = data
    T = IntervalTable(build_graph(n, edges))
    naive = Naive(n, edges)
    for u, v in itertools.product(range(n), repeat=2):
        I = interval(T, u, v)
        assert set(I) == naive.interval(u, v)
        assert u in I and v in I and I == interval(T, v, u)
    assert all(interval(T, u, u).to_list() == [u] for u in range(n))


@settings(max_examples=40, deadline=None)
@given(connected_edge_lists(max_n=8), st.data())
def test_closure_and_hull_laws(data, draw):
    n, edges = data
    T = IntervalTable(build_graph(n, edges))
    naive = Naive(n, edges)
    S = vs(n, draw.draw(st.sets(st.integers(0, n - 1), min_size=1)))
    extra = draw.draw(st.sets(st.integers(0, n - 1)))
    bigger = S | vs(n, extra)
    c = closure(T, S)
    assert S <= c <= closure(T, bigger)
    assert set(c) == naive.closure(S)
    trace = convex_hull(T, S)
    assert all(a < b for a, b in zip(trace.stages, trace.stages[1:]))
    assert trace.stages[0] == S
    assert is_convex(T, trace.hull)
    assert convex_hull(T, trace.hull).hull == trace.hull
    assert set(trace.hull) == naive.smallest_convex_superset(S)
    for r, stage in enumerate(trace.stages):
        assert closure_power(T, S, r) == stage
    assert is_hull(T, S) == trace.hull.is_full()
    assert is_geodetic(T, S) == c.is_full()


@settings(max_examples=30, deadline=None)
@given(connected_edge_lists(max_n=8), st.data())
def test_conditions_match_definitions(data, draw):
    n, edges = data
    T = IntervalTable(build_graph(n, edges))
    naive = Naive(n, edges)
    S = sorted(draw.draw(st.sets(st.integers(0, n - 1), min_size=1)))
    expect_a = all(
        any(x in naive.interval(y, z) for y, z in itertools.combinations([s for s in S if s != x], 2))
        for x in S
    )
    assert condition_A(T, vs(n, S)) == expect_a
    if len(S) >= 2:
        outside = [x for x in S if x not in naive.closure([s for s in S if s != x])]
        assert condition_B(T, vs(n, S)) == (len(outside) >= 2)


@settings(max_examples=30, deadline=None)
@given(connected_edge_lists(max_n=9))
def test_simplicial_matches_oracle(data):
    n, edges = data
    G = build_graph(n, edges)
    assert set(simplicial_vertices(G)) == Naive(n, edges).simplicial()


def test_table_word_layout():
    G = make_family(path(70))
    T = IntervalTable(G)
    assert T.word_count == 2
    assert T.interval_mask(0, 69) == T.full_mask
    words = T.words[3, 66]
    mask = int(words[0]) | int(words[1]) << 64
    assert mask == T.interval_mask(3, 66)

"""The thirteen acceptance criteria, one test each.

Every test records a PASS/FAIL line (printed in the terminal summary and
immediately on stdout) before asserting.
"""

import itertools
import random
import subprocess
import sys

import networkx as nx

from conftest import ACCEPTANCE
from geoprod import lemmas
from geoprod.boundary import boundary_report, is_oriented
from geoprod.convexity import IntervalTable, is_hull, simplicial_vertices
from geoprod.families import (
    complete,
    complete_bipartite,
    cycle,
    make_family,
    path,
    reference_g_h,
    star,
    wheel,
)
from geoprod.graph import build_graph
from geoprod.product import strong_product
from geoprod.solvers import geodetic_number, hull_number
from geoprod.suites import (
    SMALL_FACTORS,
    random_connected_graph,
    random_graphs,
    random_pairs,
    suite_boundary,
    suite_bounds,
    suite_conditions,
    suite_intervals,
    suite_projections,
)
from geoprod.tables import TREE_A, TREE_B
from oracles import Naive

SEED = 20240607


def report(number: int, ok: bool, text: str) -> None:
    ACCEPTANCE[number] = (ok, text)
    print(f"{'PASS' if ok else 'FAIL'}  criterion {number:2d}: {text}")
    assert ok, text


def g_h(G):
    T = IntervalTable(G)
    return geodetic_number(T).value, hull_number(T).value


def product(a, b):
    return strong_product(make_family(a), make_family(b))


def test_criterion_01_table_one_closed_forms():
    specs = [path(n) for n in range(3, 10)] + [cycle(n) for n in range(3, 10)]
    specs += [complete(n) for n in range(1, 7)]
    specs += [complete_bipartite(p, q) for p in range(2, 5) for q in range(p, 5)]
    specs += [star(n) for n in range(2, 8)] + [wheel(n) for n in range(5, 8)] + [TREE_A, TREE_B]
    bad = [(s.name, g_h(make_family(s)), reference_g_h(s)) for s in specs
           if g_h(make_family(s)) != reference_g_h(s)]
    report(1, not bad, f"{len(specs)} family instances equal their closed forms; mismatches {bad}")


def test_criterion_02_geodetic_k_m_c_n():
    expected = {(3, 4): 4, (4, 6): 4, (3, 5): 5, (4, 7): 5}
    got = {mn: geodetic_number(IntervalTable(product(complete(mn[0]), cycle(mn[1])).graph)).value for mn in expected}
    report(2, got == expected, f"g(K_m x C_n) {got}")


def test_criterion_03_hull_k_m_c_n():
    grid = [(3, 4), (4, 6), (3, 5), (4, 7)]
    got = {mn: hull_number(IntervalTable(product(complete(mn[0]), cycle(mn[1])).graph)).value for mn in grid}
    expected = {(m, n): 2 if n % 2 == 0 else 3 for m, n in grid}
    report(3, got == expected, f"h(K_m x C_n) {got}")


def test_criterion_04_table_seven():
    got = [geodetic_number(IntervalTable(product(cycle(5), cycle(n)).graph)).value for n in range(4, 10)]
    report(4, got == [5, 5, 6, 7, 4, 6], f"g(C5 x C_n), n=4..9: {got}")


def test_criterion_05_odd_torus_hulls():
    P = product(cycle(5), cycle(7))
    T = IntervalTable(P.graph)
    h57 = hull_number(T).value
    witness_ok = is_hull(T, P.vertex_set([(0, 0), (1, 3)]))
    h55 = hull_number(IntervalTable(product(cycle(5), cycle(5)).graph)).value
    report(5, h57 == 2 and witness_ok and h55 == 3,
           f"h(C5 x C7)={h57}, {{(0,0),(1,3)}} hull set: {witness_ok}, h(C5 x C5)={h55}")


def test_criterion_06_odd_cycle_times_path():
    got, ok = {}, True
    for k, m in [(2, 4), (2, 5), (3, 3), (3, 4)]:
        h = hull_number(IntervalTable(product(cycle(2 * k + 1), path(m)).graph)).value
        got[(k, m)] = h
        ok &= h == (2 if k <= m - 2 else 3)
    report(6, ok, f"h(C_(2k+1) x P_m) by (k,m): {got}")


def test_criterion_07_p3_times_odd_cycles():
    g7 = geodetic_number(IntervalTable(product(path(3), cycle(7)).graph)).value
    g5 = geodetic_number(IntervalTable(product(path(3), cycle(5)).graph)).value
    report(7, (g7, g5) == (5, 6), f"g(P3 x C7)={g7}, g(P3 x C5)={g5}")


def test_criterion_08_extreme_geodesic_products():
    cases = [(path(3), path(4), 4), (path(3), complete(3), 6), (complete(3), complete(4), 12), (TREE_A, TREE_A, 9)]
    got, ok = [], True
    for a, b, value in cases:
        P = product(a, b)
        g, h = g_h(P.graph)
        ext = len(simplicial_vertices(P.graph))
        got.append((f"{a.name} x {b.name}", g, h))
        ok &= g == h == ext == value
    report(8, ok, f"g = h = |Ext(G)||Ext(H)|: {got}")


def test_criterion_09_bound_suite():
    names = [path(3), path(4), cycle(4), cycle(5), cycle(7), complete(3), complete(4), complete_bipartite(2, 3)]
    graphs = [make_family(s) for s in names]
    pairs = [(G, H) for G, H in itertools.combinations_with_replacement(graphs, 2) if G.n * H.n <= 60]
    pairs += random_pairs(SEED, 50)
    reports = suite_bounds(pairs=pairs)
    needed = {"g_lower", "g_upper", "g_at_least_4", "h_lower", "h_upper", "h_le_h(G)_when_Ext(G)_empty"}
    checked = sum(r.checked for r in reports.values())
    failed = {k: r.failures[:2] for k, r in reports.items() if r.failures}
    ok = not failed and needed <= set(reports) and all(reports[k].checked for k in needed)
    report(9, ok, f"{len(pairs)} factor pairs, {checked} bound checks, violations {failed}")


def _atlas_graphs(max_n: int):
    for A in nx.graph_atlas_g()[1:]:
        if A.number_of_nodes() <= max_n and nx.is_connected(A):
            yield build_graph(A.number_of_nodes(), A.edges())


def test_criterion_10_lemma_suites():
    reports = {}
    reports.update(suite_intervals(seed=SEED, trials=100))
    reports.update(suite_projections(seed=SEED, trials=100))
    reports.update(suite_conditions(seed=SEED, trials=100))
    # every connected graph on at most six vertices
    atlas = list(_atlas_graphs(6))
    K2 = make_family(complete(2))
    for G in atlas:
        T = IntervalTable(G)
        lemmas.check_three_point(T, reports["three-point"])
        P = strong_product(G, K2)
        lemmas.check_clique_layer(P, IntervalTable(P.graph), T, lemmas.all_subsets(G.n), reports["clique-layer"])
    needed = {"interval-characterization", "exclusions", "three-point", "closure-product", "geodesic-projection",
              "product-sets", "geodetic-projection", "slice-hull", "clique-layer", "odd-cycle-B", "even-cycle-A"}
    failed = {k: r.failures[:2] for k, r in reports.items() if r.failures}
    ok = not failed and needed <= set(reports) and all(reports[k].checked for k in needed)
    counts = ", ".join(f"{k}={r.checked}" for k, r in sorted(reports.items()))
    report(10, ok, f"{len(atlas)} atlas graphs plus 100 random instances; {counts}; failures {failed}")


def test_criterion_11_boundary_suite():
    graphs = [make_family(s) for s in SMALL_FACTORS]
    fixed = [(G, H) for G, H in itertools.combinations(graphs, 2) if is_oriented(G, H) or is_oriented(H, G)][:20]
    rng_pairs = [(G, H) for G, H in random_pairs(SEED, 200, 2, 6) if is_oriented(G, H) or is_oriented(H, G)][:50]
    reports = suite_boundary(pairs=fixed + rng_pairs)
    formulas = reports["product-boundary-formulas"]
    chain = reports["containment-chain"]
    extra = random_graphs(SEED, 50, 1, 12)
    chain_ok = all(all(boundary_report(G).containments().values()) for G in extra)
    ok = len(fixed) == 20 and len(rng_pairs) == 50 and formulas.passed and chain.passed and chain_ok
    report(11, ok, f"{formulas.checked} oriented pairs, all four identities: {formulas.passed}; "
                   f"containment chain on {chain.checked + len(extra)} graphs: {chain.passed and chain_ok}")


def test_criterion_12_oracle_equivalence():
    specs = [path(n) for n in range(1, 10)] + [cycle(n) for n in range(3, 10)]
    specs += [complete(n) for n in range(1, 10)]
    specs += [complete_bipartite(p, q) for p in range(2, 5) for q in range(p, 10 - p)]
    specs += [star(n) for n in range(2, 10)] + [wheel(n) for n in range(4, 10)] + [TREE_A, TREE_B]
    graphs = [make_family(s) for s in specs]
    rng = random.Random(SEED)
    graphs += [random_connected_graph(rng, 1, 9) for _ in range(200)]
    bad = []
    for G in graphs:
        naive = Naive(G.n, G.edges())
        if g_h(G) != (naive.g(), naive.h()):
            bad.append((G.n, G.edges()))
    report(12, not bad, f"{len(graphs)} graphs, solver equals all-subsets oracle; mismatches {bad[:3]}")


def test_criterion_13_worker_determinism():
    cmd = [sys.executable, "-m", "geoprod.cli", "table", "t7"]
    one = subprocess.run(cmd + ["--workers", "1"], capture_output=True, timeout=600)
    eight = subprocess.run(cmd + ["--workers", "8"], capture_output=True, timeout=600)
    ok = one.returncode == eight.returncode == 0 and one.stdout == eight.stdout and one.stdout.count(b"\n") == 6
    report(13, ok, f"table t7 with 1 and 8 workers: {len(one.stdout)} bytes each, identical {one.stdout == eight.stdout}")

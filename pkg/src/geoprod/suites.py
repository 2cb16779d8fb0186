"""Property suites behind ``geoprod check``.

A suite runs its checks over a fixed list of family instances plus
``trials`` seeded random connected graphs (or factor pairs) and returns one
``CheckReport`` per property.
"""

from __future__ import annotations

import itertools
import random
from typing import Callable, Iterable

from . import lemmas
from .boundary import boundary_report, contour_set, is_oriented, verify_product_boundary
from .convexity import (
    IntervalTable,
    condition_A,
    condition_B,
    is_extreme_geodesic,
    is_geodetic,
    is_hull,
    simplicial_vertices,
)
from .families import (
    FamilySpec,
    complete,
    complete_bipartite,
    cycle,
    make_family,
    path,
    star,
    tree,
    wheel,
)
from .graph import Graph, VertexSet, build_graph
from .product import (
    CheckReport,
    ProductGraph,
    check_exclusions,
    check_geodesic_projection,
    check_interval_characterization,
    extreme_product_identity,
    strong_product,
    verify_distance_formula,
)
from .solvers import bounds_report, geodetic_number, verify_condition_A_collapse

SUITES = ("intervals", "projections", "bounds", "conditions", "boundary")

SMALL_FACTORS: tuple[FamilySpec, ...] = (
    path(2), path(3), path(4), path(5), path(6),
    cycle(3), cycle(4), cycle(5), cycle(6),
    complete(4), complete_bipartite(2, 3), star(4), star(5),
    wheel(5), wheel(6), tree([(0, 1), (1, 2), (2, 3), (1, 4), (4, 5)]),
)


def random_connected_graph(rng: random.Random, min_n: int = 2, max_n: int = 8) -> Graph:
    """Erdos-Renyi G(n, p) conditioned on connectivity by rejection."""
    n = rng.randint(min_n, max_n)
    p = rng.uniform(0.25, 0.75)
    while True:
        edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p]
        try:
            return build_graph(n, edges)
        except ValueError:
            continue


def random_pairs(seed: int, trials: int, min_n: int = 2, max_n: int = 5) -> list[tuple[Graph, Graph]]:
    rng = random.Random(seed)
    return [(random_connected_graph(rng, min_n, max_n), random_connected_graph(rng, min_n, max_n))
            for _ in range(trials)]


def random_graphs(seed: int, trials: int, min_n: int = 2, max_n: int = 8) -> list[Graph]:
    rng = random.Random(seed)
    return [random_connected_graph(rng, min_n, max_n) for _ in range(trials)]


def _merge(reports: dict[str, CheckReport], new: CheckReport) -> None:
    target = reports.setdefault(new.name, CheckReport(new.name))
    if target is new:
        return
    target.checked += new.checked
    target.failures.extend(new.failures)


def _sample_sets(rng: random.Random, n: int, count: int) -> list[VertexSet]:
    if n <= 4:
        return list(lemmas.all_subsets(n))
    out = []
    for _ in range(count):
        size = rng.randint(1, n)
        out.append(VertexSet.of(n, rng.sample(range(n), size)))
    return out


class _Pair:
    """A factor pair with its product and the three interval tables."""

    def __init__(self, G: Graph, H: Graph) -> None:
        self.P: ProductGraph = strong_product(G, H)
        self.TP = IntervalTable(self.P.graph)
        self.TG = IntervalTable(G)
        self.TH = IntervalTable(H)


def _fixed_pairs(ordered: bool) -> list[tuple[Graph, Graph]]:
    graphs = [make_family(s) for s in SMALL_FACTORS]
    combos = itertools.product(graphs, repeat=2) if ordered else itertools.combinations_with_replacement(graphs, 2)
    return list(combos)


def suite_intervals(seed: int = 0, trials: int = 20,
                    pairs: Iterable[tuple[Graph, Graph]] | None = None) -> dict[str, CheckReport]:
    """Distance formula, interval description, closure products, three-point
    exclusion and the three product exclusion configurations."""
    reports: dict[str, CheckReport] = {}
    rng = random.Random(seed)
    if pairs is None:
        pairs = _fixed_pairs(ordered=False) + random_pairs(seed, trials)
    for G, H in pairs:
        pp = _Pair(G, H)
        _merge(reports, verify_distance_formula(pp.P, strict=False))
        _merge(reports, check_interval_characterization(pp.P, pp.TP))
        _merge(reports, check_exclusions(pp.P, pp.TP))
        for S1, S2 in zip(_sample_sets(rng, G.n, 6), _sample_sets(rng, H.n, 6)):
            _merge(reports, lemmas.check_closure_product(pp.P, pp.TP, pp.TG, pp.TH, S1, S2))
    singles = [make_family(s) for s in SMALL_FACTORS] + random_graphs(seed + 1, trials)
    for G in singles:
        _merge(reports, lemmas.check_three_point(IntervalTable(G)))
    return reports


def suite_projections(seed: int = 0, trials: int = 20,
                      pairs: Iterable[tuple[Graph, Graph]] | None = None) -> dict[str, CheckReport]:
    """Geodesic projection, product/projection of geodetic and hull sets,
    slice hull sets and Ext of a product."""
    reports: dict[str, CheckReport] = {}
    rng = random.Random(seed)
    if pairs is None:
        pairs = _fixed_pairs(ordered=True) + random_pairs(seed, trials)
    for G, H in pairs:
        pp = _Pair(G, H)
        _merge(reports, check_geodesic_projection(pp.P, pp.TP))
        _merge(reports, extreme_product_identity(pp.P))
        geo_g = [S for S in lemmas.all_subsets(G.n) if is_geodetic(pp.TG, S)]
        geo_h = [S for S in lemmas.all_subsets(H.n) if is_geodetic(pp.TH, S)]
        hull_g = [S for S in lemmas.all_subsets(G.n) if is_hull(pp.TG, S)]
        hull_h = [S for S in lemmas.all_subsets(H.n) if is_hull(pp.TH, S)]
        for S1, S2 in itertools.islice(itertools.product(geo_g + hull_g, geo_h + hull_h), 0, None, 7):
            _merge(reports, lemmas.check_product_sets(pp.P, pp.TP, pp.TG, pp.TH, S1, S2))
        candidates = [pp.P.cross(S1, S2) for S1, S2 in zip(geo_g[:4], geo_h[:4])]
        candidates += [VertexSet.of(pp.P.n, rng.sample(range(pp.P.n), rng.randint(2, pp.P.n)))
                       for _ in range(12)]
        _merge(reports, lemmas.check_projection(pp.P, pp.TP, pp.TG, pp.TH, candidates))
        _merge(reports, lemmas.check_slice_hull(pp.P, pp.TP, pp.TG, hull_g))
    return reports


def suite_conditions(seed: int = 0, trials: int = 20) -> dict[str, CheckReport]:
    """Condition (B) on odd cycles, clique layers of (A)-sets, the (A)
    collapse g(G x K_n) = g(G) and g(G x C_odd) >= 5."""
    reports: dict[str, CheckReport] = {}
    for n in (5, 7, 9, 11):
        _merge(reports, lemmas.check_odd_cycle_condition_B(IntervalTable(make_family(cycle(n)))))
    even = CheckReport("even-cycle-A")
    for n in (4, 6, 8, 10):
        T = IntervalTable(make_family(cycle(n)))
        S = VertexSet.of(n, [0, 1, n // 2, n // 2 + 1])
        even.record(is_geodetic(T, S) and condition_A(T, S), n)
    for k in (2, 3, 4):
        n = 2 * k + 1
        T = IntervalTable(make_family(cycle(n)))
        S = VertexSet.of(n, [0, 1, k, k + 1, k + 2])
        even.record(is_geodetic(T, S) and condition_A(T, S), n)
    _merge(reports, even)

    factors = [make_family(s) for s in SMALL_FACTORS] + random_graphs(seed, trials, 2, 6)
    for G in factors:
        TG = IntervalTable(G)
        for order in (1, 2, 3):
            P = strong_product(G, make_family(complete(order)))
            TP = IntervalTable(P.graph)
            _merge(reports, lemmas.check_clique_layer(P, TP, TG, lemmas.all_subsets(G.n)))
    collapse = CheckReport("condition-A-collapse")
    for spec, order in [(complete_bipartite(2, 3), 3), (complete_bipartite(3, 3), 2), (complete_bipartite(4, 4), 2),
                        (cycle(8), 2), (cycle(9), 2), (complete(3), 2), (path(4), 2)]:
        G = make_family(spec)
        rep = verify_condition_A_collapse(G, order)
        collapse.record(rep.passed, (spec.name, order))
    _merge(reports, collapse)

    odd = CheckReport("odd-cycle-product-at-least-5")
    for spec in (complete(2), complete(3), path(3), path(4), cycle(5)):
        G = make_family(spec)
        TG = IntervalTable(G)
        if not all(condition_B(TG, S) for S in lemmas.all_subsets(G.n, 4) if len(S) >= 2):
            continue
        for n in (5, 7):
            P = strong_product(G, make_family(cycle(n)))
            g = geodetic_number(IntervalTable(P.graph)).value
            odd.record(g >= 5, (spec.name, n, g))
    _merge(reports, odd)
    return reports


DEFAULT_BOUND_INSTANCES: tuple[tuple[FamilySpec, FamilySpec], ...] = (
    (complete(3), complete(4)),
    (complete_bipartite(4, 4), complete(4)),
    (cycle(5), cycle(7)),
)


def suite_bounds(seed: int = 0, trials: int = 20,
                 pairs: Iterable[tuple[Graph, Graph]] | None = None,
                 time_limit: float | None = None) -> dict[str, CheckReport]:
    """Every product bound on g and h, plus h <= g and the extreme geodesic
    product value |Ext(G)| |Ext(H)|."""
    reports: dict[str, CheckReport] = {}
    if pairs is None:
        pairs = [(make_family(a), make_family(b)) for a, b in DEFAULT_BOUND_INSTANCES]
        pairs += random_pairs(seed, trials)
    extreme = CheckReport("extreme-geodesic-product")
    for G, H in pairs:
        rep = bounds_report(G, H, time_limit=time_limit)
        for name, check in rep.checks.items():
            if check.applicable:
                one = CheckReport(name)
                one.record(check.holds, (G.n, H.n, check.lhs, check.rhs))
                _merge(reports, one)
        if is_extreme_geodesic(G) and is_extreme_geodesic(H):
            expected = len(simplicial_vertices(G)) * len(simplicial_vertices(H))
            extreme.record(rep.values["g(GxH)"] == expected == rep.values["h(GxH)"], (G.n, H.n))
    _merge(reports, extreme)
    return reports


def suite_boundary(seed: int = 0, trials: int = 20,
                   pairs: Iterable[tuple[Graph, Graph]] | None = None) -> dict[str, CheckReport]:
    """Product formulas for the boundary, periphery, eccentric set and contour,
    the containment chain on every graph built, and contour hull sets."""
    reports: dict[str, CheckReport] = {}
    if pairs is None:
        pairs = [(G, H) for G, H in _fixed_pairs(ordered=False) if is_oriented(G, H) or is_oriented(H, G)]
        rng_pairs = [(G, H) for G, H in random_pairs(seed, trials * 3, 2, 6)
                     if is_oriented(G, H) or is_oriented(H, G)]
        pairs += rng_pairs[:trials]
    formulas = CheckReport("product-boundary-formulas")
    chain = CheckReport("containment-chain")
    contour_hull = CheckReport("contour-is-hull")
    contour_geo = CheckReport("contour-geodetic-product")
    for G, H in pairs:
        rep = verify_product_boundary(G, H)
        formulas.record(rep.passed, rep.items)
        P = strong_product(G, H)
        for graph in (G, H, P.graph):
            ok = all(boundary_report(graph).containments().values())
            chain.record(ok, graph.n)
            T = IntervalTable(graph)
            contour_hull.record(is_hull(T, contour_set(graph)), graph.n)
        TG, TH = IntervalTable(G), IntervalTable(H)
        if is_geodetic(TG, contour_set(G)) and is_geodetic(TH, contour_set(H)):
            contour_geo.record(is_geodetic(IntervalTable(P.graph), contour_set(P.graph)), (G.n, H.n))
    for r in (formulas, chain, contour_hull, contour_geo):
        _merge(reports, r)
    return reports


RUNNERS: dict[str, Callable[..., dict[str, CheckReport]]] = {
    "intervals": suite_intervals,
    "projections": suite_projections,
    "bounds": suite_bounds,
    "conditions": suite_conditions,
    "boundary": suite_boundary,
}


def run_suite(name: str, seed: int = 0, trials: int = 20) -> dict[str, CheckReport]:
    names = SUITES if name == "all" else (name,)
    out: dict[str, CheckReport] = {}
    for suite in names:
        if suite not in RUNNERS:
            raise KeyError(f"unknown suite {suite!r}")
        for key, rep in RUNNERS[suite](seed=seed, trials=trials).items():
            out[f"{suite}.{key}"] = rep
    return out

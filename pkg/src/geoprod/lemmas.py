"""Set-level properties of intervals, closures and hulls in strong products.

Each function checks one universally quantified statement on the
configurations it is given and returns a ``CheckReport``; the suites in
``geoprod.suites`` decide which graphs and sets to feed in.
"""

from __future__ import annotations

import itertools
from typing import Iterable

from .convexity import (
    IntervalTable,
    closure_power,
    condition_A,
    condition_B,
    is_geodetic,
    is_hull,
    simplicial_vertices,
)
from .graph import VertexSet
from .product import CheckReport, ProductGraph, Side, project


def check_three_point(T: IntervalTable, report: CheckReport | None = None) -> CheckReport:
    """h1 in I[h2,h3] (all distinct) excludes h2 in I[h1,h3] and h3 in I[h1,h2]."""
    report = report or CheckReport("three-point")
    masks = T.masks
    for a, b, c in itertools.permutations(range(T.n), 3):
        if masks[b][c] >> a & 1:
            report.record(not masks[a][c] >> b & 1 and not masks[a][b] >> c & 1, (a, b, c))
    return report


def check_closure_product(P: ProductGraph, TP: IntervalTable, TG: IntervalTable, TH: IntervalTable,
                          S1: VertexSet, S2: VertexSet, r_max: int = 3,
                          report: CheckReport | None = None) -> CheckReport:
    """I^r[S1] x I^r[S2] is contained in I^r[S1 x S2] for r = 1..r_max."""
    report = report or CheckReport("closure-product")
    cross = P.cross(S1, S2)
    for r in range(1, r_max + 1):
        lhs = P.cross(closure_power(TG, S1, r), closure_power(TH, S2, r))
        report.record(lhs <= closure_power(TP, cross, r), (r, S1.to_list(), S2.to_list()))
    return report


def check_product_sets(P: ProductGraph, TP: IntervalTable, TG: IntervalTable, TH: IntervalTable,
                       S1: VertexSet, S2: VertexSet, report: CheckReport | None = None) -> CheckReport:
    """Geodetic (hull) factor sets give a geodetic (hull) product set."""
    report = report or CheckReport("product-sets")
    cross = P.cross(S1, S2)
    if is_geodetic(TG, S1) and is_geodetic(TH, S2):
        report.record(is_geodetic(TP, cross), ("geodetic", S1.to_list(), S2.to_list()))
    if is_hull(TG, S1) and is_hull(TH, S2):
        report.record(is_hull(TP, cross), ("hull", S1.to_list(), S2.to_list()))
    return report


def check_projection(P: ProductGraph, TP: IntervalTable, TG: IntervalTable, TH: IntervalTable,
                     sets: Iterable[VertexSet], report: CheckReport | None = None) -> CheckReport:
    """A geodetic set of G x H has a geodetic projection on G or on H."""
    report = report or CheckReport("geodetic-projection")
    for S in sets:
        if not is_geodetic(TP, S):
            continue
        ok = is_geodetic(TG, project(P, S, Side.LEFT)) or is_geodetic(TH, project(P, S, Side.RIGHT))
        report.record(ok, P.pairs(S))
    return report


def check_slice_hull(P: ProductGraph, TP: IntervalTable, TG: IntervalTable, sets: Iterable[VertexSet],
                     report: CheckReport | None = None) -> CheckReport:
    """Ext(G) empty and S a hull set of G make S x {x} a hull set, for every x."""
    report = report or CheckReport("slice-hull")
    if simplicial_vertices(P.left):
        return report
    for S in sets:
        if not is_hull(TG, S):
            continue
        for x in range(P.right.n):
            layer = P.vertex_set((g, x) for g in S)
            report.record(is_hull(TP, layer), (S.to_list(), x))
    return report


def check_clique_layer(P: ProductGraph, TP: IntervalTable, TG: IntervalTable, sets: Iterable[VertexSet],
                       report: CheckReport | None = None) -> CheckReport:
    """In G x K_n, a geodetic S of G satisfying (A) makes S x {k} geodetic.

    ``P.right`` must be complete.
    """
    report = report or CheckReport("clique-layer")
    for S in sets:
        if len(S) < 3 or not is_geodetic(TG, S) or not condition_A(TG, S):
            continue
        for k in range(P.right.n):
            report.record(is_geodetic(TP, P.vertex_set((s, k) for s in S)), (S.to_list(), k))
    return report


def check_odd_cycle_condition_B(T: IntervalTable, report: CheckReport | None = None) -> CheckReport:
    """Every 2..4 vertex subset of an odd cycle C_{2h+1}, h >= 2, satisfies (B)."""
    report = report or CheckReport("odd-cycle-B")
    for size in (2, 3, 4):
        for combo in itertools.combinations(range(T.n), size):
            report.record(condition_B(T, VertexSet.of(T.n, combo)), combo)
    return report


def all_subsets(n: int, max_size: int | None = None) -> Iterable[VertexSet]:
    top = n if max_size is None else min(n, max_size)
    for size in range(1, top + 1):
        for combo in itertools.combinations(range(n), size):
            yield VertexSet.of(n, combo)

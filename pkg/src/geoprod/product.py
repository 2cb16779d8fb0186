"""Strong products, the (g, h) <-> flat index bookkeeping, and projections.

The checks in this module exercise the metric facts about strong products
(max-distance formula, projection of geodesics, the interval description
along the dominant coordinate, and the three exclusion configurations).
Each check returns a :class:`CheckReport` and never raises on a failed
instance unless ``strict`` is requested.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

import numpy as np

from .errors import FormulaViolation, Overflow
from .graph import Graph, VertexSet, build_graph, iter_bits

DEFAULT_VERTEX_CAP = 4096


class Side(str, Enum):
    LEFT = "left"
    RIGHT = "right"


def vertex_cap() -> int:
    value = os.environ.get("GEOPROD_VERTEX_CAP")
    return int(value) if value else DEFAULT_VERTEX_CAP


@dataclass(frozen=True, eq=False)
class ProductGraph:
    graph: Graph
    left: Graph
    right: Graph

    @property
    def n(self) -> int:
        return self.graph.n

    def encode(self, g: int, h: int) -> int:
        return g * self.right.n + h

    def decode(self, index: int) -> tuple[int, int]:
        return divmod(index, self.right.n)

    def vertex_set(self, pairs: Iterable[tuple[int, int]]) -> VertexSet:
        return VertexSet.of(self.n, (self.encode(g, h) for g, h in pairs))

    def pairs(self, S: VertexSet) -> list[tuple[int, int]]:
        return [self.decode(i) for i in S]

    def cross(self, S1: VertexSet, S2: VertexSet) -> VertexSet:
        """The set S1 x S2 of product vertices."""
        return self.vertex_set((g, h) for g in S1 for h in S2)


@dataclass
class CheckReport:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, detail) -> None:
        self.checked += 1
        if not ok and len(self.failures) < 20:
            self.failures.append(detail)
        elif not ok:
            self.failures.append(None)

    def raise_on_failure(self) -> "CheckReport":
        if self.failures:
            raise FormulaViolation(f"{self.name}: {len(self.failures)} failure(s), first {self.failures[0]}")
        return self


def strong_product(G: Graph, H: Graph, cap: int | None = None) -> ProductGraph:
    """Strong product with row-major numbering (g, h) -> g * |V(H)| + h."""
    cap = vertex_cap() if cap is None else cap
    n = G.n * H.n
    if n > cap:
        raise Overflow(f"product has {n} vertices, above the cap of {cap}")
    nh = H.n
    gadj, hadj = G.adjacency_masks, H.adjacency_masks
    # layer mask of H-closed neighbourhood, shifted into each G-copy
    closed_h = [hadj[h] | 1 << h for h in range(nh)]
    adj = []
    for g in range(G.n):
        closed_g = gadj[g] | 1 << g
        for h in range(nh):
            mask = 0
            for g2 in iter_bits(closed_g):
                mask |= closed_h[h] << (g2 * nh)
            adj.append(mask & ~(1 << (g * nh + h)))
    labels = [(G.labels[g], H.labels[h]) for g in range(G.n) for h in range(nh)]
    graph = build_graph(n, _edges_from_masks(adj), labels)
    return ProductGraph(graph, G, H)


def _edges_from_masks(adj: list[int]):
    for u, mask in enumerate(adj):
        for v in iter_bits(mask >> (u + 1)):
            yield u, u + 1 + v


def project(P: ProductGraph, S: VertexSet, side: Side | str) -> VertexSet:
    side = Side(side)
    if side is Side.LEFT:
        return VertexSet.of(P.left.n, {P.decode(i)[0] for i in S})
    return VertexSet.of(P.right.n, {P.decode(i)[1] for i in S})


def factor_distance_max(P: ProductGraph) -> np.ndarray:
    """max{d_G, d_H} laid out on the product's flat indices."""
    dg = P.left.distances.dist.astype(np.int32)
    dh = P.right.distances.dist.astype(np.int32)
    ng, nh = P.left.n, P.right.n
    return np.maximum(dg[:, None, :, None], dh[None, :, None, :]).reshape(ng * nh, ng * nh)


def verify_distance_formula(P: ProductGraph, strict: bool = True) -> CheckReport:
    """Compare BFS distances on the product with the coordinate maximum."""
    report = CheckReport("distance-formula")
    bfs = P.graph.distances.dist.astype(np.int32)
    expected = factor_distance_max(P)
    bad = np.argwhere(bfs != expected)
    report.checked = bfs.size
    for u, v in bad[:20]:
        report.failures.append((P.decode(int(u)), P.decode(int(v))))
    diam = P.graph.distances.diameter
    report.record(diam == max(P.left.distances.diameter, P.right.distances.diameter), ("diameter", diam))
    return report.raise_on_failure() if strict else report


def extreme_product_identity(P: ProductGraph) -> CheckReport:
    from .convexity import simplicial_vertices

    report = CheckReport("ext-product")
    lhs = simplicial_vertices(P.graph)
    rhs = P.cross(simplicial_vertices(P.left), simplicial_vertices(P.right))
    report.record(lhs == rhs, (lhs.to_list(), rhs.to_list()))
    return report


def check_geodesic_projection(P: ProductGraph, table=None) -> CheckReport:
    """Whenever one coordinate realises the product distance, the interval
    projects into the factor interval along that coordinate."""
    from .convexity import IntervalTable

    T = table or IntervalTable(P.graph)
    TG, TH = IntervalTable(P.left), IntervalTable(P.right)
    dg, dh = P.left.distances.dist, P.right.distances.dist
    report = CheckReport("geodesic-projection")
    for u, v in itertools.combinations(range(P.n), 2):
        (g1, h1), (g2, h2) = P.decode(u), P.decode(v)
        d = P.graph.distances.dist[u, v]
        box = T.interval(u, v)
        if d == dg[g1, g2]:
            proj = project(P, box, Side.LEFT)
            report.record(proj <= TG.interval(g1, g2), ("left", (g1, h1), (g2, h2)))
        if d == dh[h1, h2]:
            proj = project(P, box, Side.RIGHT)
            report.record(proj <= TH.interval(h1, h2), ("right", (g1, h1), (g2, h2)))
    return report


def check_interval_characterization(P: ProductGraph, table=None) -> CheckReport:
    """I[u,v] = {(g,h): g in I[g1,g2], d(h1,h) <= d(g1,g), d(h,h2) <= d(g,g2)}
    whenever d(u,v) = d_G(g1,g2), and the mirrored statement on H."""
    from .convexity import IntervalTable

    T = table or IntervalTable(P.graph)
    dg = P.left.distances.dist.astype(np.int32)
    dh = P.right.distances.dist.astype(np.int32)
    weights = 1 << np.arange(P.n, dtype=object)
    report = CheckReport("interval-characterization")
    for u in range(P.n):
        g1, h1 = P.decode(u)
        for v in range(P.n):
            g2, h2 = P.decode(v)
            d = max(dg[g1, g2], dh[h1, h2])
            actual = T.interval(u, v).mask
            if d == dg[g1, g2]:
                on_geo = dg[g1] + dg[:, g2] == dg[g1, g2]
                ok = (on_geo[:, None]
                      & (dh[h1][None, :] <= dg[g1][:, None])
                      & (dh[:, h2][None, :] <= dg[:, g2][:, None]))
                report.record(_mask_of(ok.reshape(-1), weights) == actual, ("left", (g1, h1), (g2, h2)))
            if d == dh[h1, h2]:
                on_geo = dh[h1] + dh[:, h2] == dh[h1, h2]
                ok = (on_geo[None, :]
                      & (dg[g1][:, None] <= dh[h1][None, :])
                      & (dg[:, g2][:, None] <= dh[:, h2][None, :]))
                report.record(_mask_of(ok.reshape(-1), weights) == actual, ("right", (g1, h1), (g2, h2)))
    return report


def _mask_of(flags: np.ndarray, weights: np.ndarray) -> int:
    return int(weights[flags].sum()) if flags.any() else 0


def check_exclusions(P: ProductGraph, table=None) -> CheckReport:
    """The three non-membership configurations over g1 != g2 and distinct
    h1, h2, h3:

    (i)   (g2,h2) is outside I[{(g1,h1),(g1,h2),(g2,h1)}];
    (ii)  h3 outside I[h1,h2] forces (g2,h3) outside I[(g1,h1),(g1,h2)];
    (iii) h3 outside I[h1,h2] forces (g1,h3) outside I[(g1,h1),(g2,h2)].
    """
    from .convexity import IntervalTable

    T = table or IntervalTable(P.graph)
    TH = IntervalTable(P.right)
    enc = P.encode
    report = CheckReport("exclusions")
    for g1, g2 in itertools.permutations(range(P.left.n), 2):
        for h1, h2 in itertools.permutations(range(P.right.n), 2):
            trio = [enc(g1, h1), enc(g1, h2), enc(g2, h1)]
            closure = T.closure_mask(trio)
            report.record(not closure >> enc(g2, h2) & 1, ("i", g1, g2, h1, h2))
            between = TH.interval(h1, h2)
            for h3 in range(P.right.n):
                if h3 in (h1, h2) or h3 in between:
                    continue
                left_pair = T.interval_mask(enc(g1, h1), enc(g1, h2))
                report.record(not left_pair >> enc(g2, h3) & 1, ("ii", g1, g2, h1, h2, h3))
                cross_pair = T.interval_mask(enc(g1, h1), enc(g2, h2))
                report.record(not cross_pair >> enc(g1, h3) & 1, ("iii", g1, g2, h1, h2, h3))
    return report

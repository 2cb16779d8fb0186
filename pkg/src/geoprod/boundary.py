"""Boundary-type vertex sets and their description on strong products.

Every set is computed straight from its definition with the distance
matrix; nothing incremental.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .convexity import simplicial_vertices
from .errors import OrientationError
from .graph import Graph, VertexSet, iter_bits
from .product import ProductGraph, strong_product


def _from_flags(n: int, flags) -> VertexSet:
    return VertexSet.of(n, (int(i) for i in np.flatnonzero(flags)))


def boundary_set(G: Graph) -> VertexSet:
    """Vertices v such that, for some u, no neighbour of v is farther from u."""
    D = G.distances.dist
    adj = G.adjacency_masks
    members = []
    for v in range(G.n):
        nbrs = list(iter_bits(adj[v]))
        if not nbrs or np.any(np.all(D[:, nbrs] <= D[:, [v]], axis=1)):
            members.append(v)
    return VertexSet.of(G.n, members)


def eccentric_set_r(G: Graph, r: int) -> VertexSet:
    """Vertices g with r <= ecc(g') = d(g', g) for some g'."""
    if r < 0:
        raise ValueError("threshold must be non-negative")
    D = G.distances.dist
    ecc = np.array(G.distances.ecc)
    realizes = (D == ecc[:, None]) & (ecc[:, None] >= r)
    return _from_flags(G.n, realizes.any(axis=0))


def eccentric_set(G: Graph) -> VertexSet:
    return eccentric_set_r(G, 0)


def contour_set(G: Graph) -> VertexSet:
    ecc = G.distances.ecc
    adj = G.adjacency_masks
    return VertexSet.of(G.n, (v for v in range(G.n) if all(ecc[w] <= ecc[v] for w in iter_bits(adj[v]))))


def periphery_set(G: Graph) -> VertexSet:
    ecc, diam = G.distances.ecc, G.distances.diameter
    return VertexSet.of(G.n, (v for v in range(G.n) if ecc[v] == diam))


@dataclass(frozen=True)
class BoundaryReport:
    boundary: VertexSet
    eccentric: VertexSet
    contour: VertexSet
    periphery: VertexSet
    ecc_r: dict[int, VertexSet]
    extreme: VertexSet

    def containments(self) -> dict[str, bool]:
        return {
            "Per <= Ct & Ecc": self.periphery <= (self.contour & self.eccentric),
            "Ecc | Ct <= boundary": (self.eccentric | self.contour) <= self.boundary,
            "Ext <= Ct": self.extreme <= self.contour,
        }


def boundary_report(G: Graph) -> BoundaryReport:
    diam = G.distances.diameter
    return BoundaryReport(
        boundary=boundary_set(G),
        eccentric=eccentric_set(G),
        contour=contour_set(G),
        periphery=periphery_set(G),
        ecc_r={r: eccentric_set_r(G, r) for r in range(diam + 1)},
        extreme=simplicial_vertices(G),
    )


def is_oriented(G: Graph, H: Graph) -> bool:
    """D_G <= D_H and r_G <= r_H."""
    dg, dh = G.distances, H.distances
    return dg.diameter <= dh.diameter and dg.radius <= dh.radius


def product_boundary_items(G: Graph, H: Graph, P: ProductGraph | None = None) -> dict[str, tuple[VertexSet, VertexSet]]:
    """(direct computation on G x H, formula from the factors) for each set."""
    P = P or strong_product(G, H)
    VG, VH = G.vertices(), H.vertices()
    eg, eh = G.distances.ecc, H.distances.ecc
    ct_g, ct_h = contour_set(G), contour_set(H)
    if G.distances.diameter < H.distances.diameter:
        per = P.cross(VG, periphery_set(H))
    else:
        per = P.cross(periphery_set(G), VH) | P.cross(VG, periphery_set(H))
    contour = (
        P.vertex_set((g, h) for g in ct_g for h in VH if eh[h] < eg[g])
        | P.vertex_set((g, h) for h in ct_h for g in VG if eg[g] < eh[h])
        | P.cross(ct_g, ct_h)
    )
    return {
        "boundary": (boundary_set(P.graph), P.cross(boundary_set(G), VH) | P.cross(VG, boundary_set(H))),
        "periphery": (periphery_set(P.graph), per),
        "eccentric": (
            eccentric_set(P.graph),
            P.cross(eccentric_set_r(G, H.distances.radius), VH) | P.cross(VG, eccentric_set(H)),
        ),
        "contour": (contour_set(P.graph), contour),
    }


@dataclass
class ProductBoundaryReport:
    orientation: str | None  # "as-given", "swapped", or None when neither works
    items: dict[str, bool]
    per_orientation: dict[str, dict[str, bool]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.orientation is not None and all(self.items.values())


def verify_product_boundary(G: Graph, H: Graph, strict: bool = True) -> ProductBoundaryReport:
    """Compare the four boundary-type sets of G x H with their factor formulas.

    The factors are reordered so that D_G <= D_H and r_G <= r_H. When no
    order satisfies both, each item is evaluated under both orders and the
    outcome is reported (and raised as OrientationError when ``strict``).
    The identities are meant for nontrivial factors; with K_1 the boundary
    item fails because every vertex of K_1 is vacuously a boundary vertex.
    """
    if is_oriented(G, H):
        orientation, pair = "as-given", (G, H)
    elif is_oriented(H, G):
        orientation, pair = "swapped", (H, G)
    else:
        per = {}
        for name, (a, b) in {"as-given": (G, H), "swapped": (H, G)}.items():
            per[name] = {k: lhs == rhs for k, (lhs, rhs) in product_boundary_items(a, b).items()}
        report = ProductBoundaryReport(None, {}, per)
        if strict:
            raise OrientationError("no factor order has both D_G <= D_H and r_G <= r_H", report=report)
        return report
    items = {k: lhs == rhs for k, (lhs, rhs) in product_boundary_items(*pair).items()}
    return ProductBoundaryReport(orientation, items, {orientation: items})

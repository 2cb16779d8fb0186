"""Named graph families with canonical vertex numbering and their known g/h values."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import BadParams, Disconnected, Unsupported
from .graph import Graph, build_graph


class Kind(str, Enum):
    PATH = "Path"
    CYCLE = "Cycle"
    COMPLETE = "Complete"
    COMPLETE_BIPARTITE = "CompleteBipartite"
    STAR = "Star"
    WHEEL = "Wheel"
    TREE = "Tree"


@dataclass(frozen=True)
class FamilySpec:
    kind: Kind
    params: tuple[int, ...] = ()
    tree_edges: tuple[tuple[int, int], ...] = ()

    @property
    def order(self) -> int:
        if self.kind is Kind.COMPLETE_BIPARTITE:
            return self.params[0] + self.params[1]
        if self.kind is Kind.TREE:
            return len(self.tree_edges) + 1
        return self.params[0]

    @property
    def name(self) -> str:
        """Expression-grammar spelling, e.g. ``K2,3`` or ``T:(0-1,1-2)``."""
        if self.kind is Kind.TREE:
            return "T:(" + ",".join(f"{u}-{v}" for u, v in self.tree_edges) + ")"
        letter = {
            Kind.PATH: "P", Kind.CYCLE: "C", Kind.COMPLETE: "K",
            Kind.COMPLETE_BIPARTITE: "K", Kind.STAR: "S", Kind.WHEEL: "W",
        }[self.kind]
        return letter + ",".join(map(str, self.params))


def path(n: int) -> FamilySpec:
    return FamilySpec(Kind.PATH, (n,))


def cycle(n: int) -> FamilySpec:
    return FamilySpec(Kind.CYCLE, (n,))


def complete(n: int) -> FamilySpec:
    return FamilySpec(Kind.COMPLETE, (n,))


def complete_bipartite(p: int, q: int) -> FamilySpec:
    return FamilySpec(Kind.COMPLETE_BIPARTITE, (p, q))


def star(n: int) -> FamilySpec:
    return FamilySpec(Kind.STAR, (n,))


def wheel(n: int) -> FamilySpec:
    return FamilySpec(Kind.WHEEL, (n,))


def tree(edges) -> FamilySpec:
    return FamilySpec(Kind.TREE, tree_edges=tuple((int(u), int(v)) for u, v in edges))


def _validate(spec: FamilySpec) -> None:
    kind, p = spec.kind, spec.params
    expected = 0 if kind is Kind.TREE else 2 if kind is Kind.COMPLETE_BIPARTITE else 1
    if len(p) != expected:
        raise BadParams(f"{kind.value} takes {expected} integer parameter(s), got {len(p)}")
    if kind in (Kind.PATH, Kind.COMPLETE) and p[0] < 1:
        raise BadParams(f"{kind.value} needs n >= 1")
    if kind is Kind.CYCLE and p[0] < 3:
        raise BadParams("Cycle needs n >= 3")
    if kind is Kind.COMPLETE_BIPARTITE and not 2 <= p[0] <= p[1]:
        raise BadParams("CompleteBipartite needs 2 <= p <= q")
    if kind is Kind.STAR and p[0] < 2:
        raise BadParams("Star needs n >= 2")
    # Wheel(4) is K_4; accepted so the reference table can route it.
    if kind is Kind.WHEEL and p[0] < 4:
        raise BadParams("Wheel needs n >= 4")
    if kind is Kind.TREE:
        n = len(spec.tree_edges) + 1
        if any(not (0 <= u < n and 0 <= v < n) for u, v in spec.tree_edges):
            raise BadParams(f"tree edges must use vertices 0..{n - 1}")
        if len({frozenset(e) for e in spec.tree_edges}) != len(spec.tree_edges):
            raise BadParams("tree edges contain a duplicate")


def make_family(spec: FamilySpec) -> Graph:
    """Build the family member with the canonical numbering.

    Path/Cycle run 0..n-1 in order, K_{p,q} has parts {0..p-1} and
    {p..p+q-1}, stars and wheels put the hub at 0 (wheel rim 1..n-1).
    """
    _validate(spec)
    kind, p = spec.kind, spec.params
    if kind is Kind.PATH:
        edges = [(i, i + 1) for i in range(p[0] - 1)]
        n = p[0]
    elif kind is Kind.CYCLE:
        n = p[0]
        edges = [(i, (i + 1) % n) for i in range(n)]
    elif kind is Kind.COMPLETE:
        n = p[0]
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    elif kind is Kind.COMPLETE_BIPARTITE:
        a, b = p
        n = a + b
        edges = [(i, a + j) for i in range(a) for j in range(b)]
    elif kind is Kind.STAR:
        n = p[0]
        edges = [(0, i) for i in range(1, n)]
    elif kind is Kind.WHEEL:
        n = p[0]
        rim = n - 1
        edges = [(0, i) for i in range(1, n)]
        edges += [(1 + i, 1 + (i + 1) % rim) for i in range(rim)]
    else:
        n = len(spec.tree_edges) + 1
        edges = list(spec.tree_edges)
        try:
            return build_graph(n, edges)
        except (Disconnected, ValueError) as exc:
            raise BadParams(f"tree edges do not form a tree: {exc}") from exc
    return build_graph(n, edges)


def leaf_count(spec: FamilySpec) -> int:
    degree: dict[int, int] = {}
    for u, v in spec.tree_edges:
        degree[u] = degree.get(u, 0) + 1
        degree[v] = degree.get(v, 0) + 1
    return sum(1 for d in degree.values() if d == 1)


def reference_g_h(spec: FamilySpec) -> tuple[int, int]:
    """Closed-form (geodetic number, hull number) for the tabulated families.

    Degenerate members the general formulas do not fit are routed to the
    family they coincide with: P_1 and the one-vertex tree are K_1, the star
    S_{1,1} is K_2 and the wheel W_{1,3} is K_4.
    """
    _validate(spec)
    kind, p = spec.kind, spec.params
    if kind is Kind.TREE and not spec.tree_edges:
        return 1, 1
    if kind is Kind.PATH:
        return (1, 1) if p[0] == 1 else (2, 2)
    if kind is Kind.CYCLE:
        return (2, 2) if p[0] % 2 == 0 else (3, 3)
    if kind is Kind.TREE:
        h = leaf_count(spec)
        return h, h
    if kind is Kind.COMPLETE:
        return p[0], p[0]
    if kind is Kind.COMPLETE_BIPARTITE:
        return min(4, p[0]), 2
    if kind is Kind.STAR:
        n = p[0]
        return (2, 2) if n == 2 else (n - 1, n - 1)
    if kind is Kind.WHEEL:
        n = p[0]
        if n == 4:
            return 4, 4
        value = math.ceil((n - 1) / 2)
        return value, value
    raise Unsupported(f"no closed form for {kind}")

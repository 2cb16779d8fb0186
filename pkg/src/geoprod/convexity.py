"""Geodesic intervals, closures and convex hulls.

All intervals of a graph are precomputed once into an :class:`IntervalTable`
through the distance-sum test ``d(u,w) + d(w,v) == d(u,v)``. Each interval
is held twice: as a Python int bit mask (for scalar set algebra) and as a
row of packed ``uint64`` words (for the vectorised search in ``solvers``).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import EmptySet, TooSmall
from .graph import Graph, VertexSet, iter_bits


class IntervalTable:
    """I[u, v] for every vertex pair of one graph."""

    def __init__(self, graph: Graph) -> None:
        self.graph = graph
        self.n = n = graph.n
        self.word_count = w = (n + 63) // 64
        dist = graph.distances.dist.astype(np.int32)
        words = np.zeros((n, n, w), dtype=np.uint64)
        for u in range(n):
            on_geodesic = (dist[u][None, :] + dist) == dist[u][:, None]
            packed = np.packbits(on_geodesic, axis=1, bitorder="little")
            padded = np.zeros((n, w * 8), dtype=np.uint8)
            padded[:, : packed.shape[1]] = packed
            words[u] = padded.view("<u8").astype(np.uint64)
        words.setflags(write=False)
        self.words = words
        self.full_mask = (1 << n) - 1
        self.full_words = _int_to_words(self.full_mask, w)
        raw = words.astype("<u8").tobytes()
        step = w * 8
        self.masks = [
            [int.from_bytes(raw[(u * n + v) * step:(u * n + v + 1) * step], "little") for v in range(n)]
            for u in range(n)
        ]

    def _vertex(self, v: int) -> None:
        self.graph._check_vertex(v)

    def interval_mask(self, u: int, v: int) -> int:
        return self.masks[u][v]

    def interval(self, u: int, v: int) -> VertexSet:
        self._vertex(u)
        self._vertex(v)
        return VertexSet(self.n, self.masks[u][v])

    def closure_mask(self, vertices: Iterable[int]) -> int:
        vs = list(vertices)
        masks = self.masks
        acc = 0
        for i, u in enumerate(vs):
            row = masks[u]
            for v in vs[i:]:
                acc |= row[v]
        return acc

    def hull_stage_masks(self, mask: int) -> list[int]:
        """Masks of I^0[S], I^1[S], ... up to the first repeated stage."""
        masks = self.masks
        stages = [mask]
        current = mask
        frontier = list(iter_bits(mask))
        while True:
            members = list(iter_bits(current))
            acc = current
            for d in frontier:
                row = masks[d]
                for c in members:
                    acc |= row[c]
            if acc == current:
                return stages
            stages.append(acc)
            frontier = list(iter_bits(acc & ~current))
            current = acc

    def spans(self, mask: int) -> bool:
        """True when the convex hull of ``mask`` is the whole vertex set."""
        masks, full = self.masks, self.full_mask
        current = mask
        frontier = list(iter_bits(mask))
        while frontier:
            members = list(iter_bits(current))
            acc = current
            for d in frontier:
                row = masks[d]
                for c in members:
                    acc |= row[c]
            if acc == full:
                return True
            frontier = list(iter_bits(acc & ~current))
            current = acc
        return current == full


def _int_to_words(mask: int, w: int) -> np.ndarray:
    return np.frombuffer(mask.to_bytes(w * 8, "little"), dtype="<u8").astype(np.uint64)


def _members(T: IntervalTable, S: VertexSet) -> list[int]:
    if S.universe_size != T.n:
        raise ValueError(f"set over {S.universe_size} vertices used with a graph of order {T.n}")
    if not S:
        raise EmptySet("operation is undefined on the empty set")
    return list(S)


def interval(T: IntervalTable, u: int, v: int) -> VertexSet:
    return T.interval(u, v)


def closure(T: IntervalTable, S: VertexSet) -> VertexSet:
    """Geodetic closure I[S]: union of I[u, v] over u, v in S (u = v allowed)."""
    return VertexSet(T.n, T.closure_mask(_members(T, S)))


def closure_power(T: IntervalTable, S: VertexSet, r: int) -> VertexSet:
    """I^r[S], the r-fold iterated closure."""
    members = _members(T, S)
    mask = T.closure_mask(members) if r else S.mask
    for _ in range(r - 1):
        mask = T.closure_mask(iter_bits(mask))
    return VertexSet(T.n, mask)


@dataclass(frozen=True)
class HullTrace:
    stages: tuple[VertexSet, ...]

    @property
    def iterations(self) -> int:
        return len(self.stages) - 1

    @property
    def hull(self) -> VertexSet:
        return self.stages[-1]


def convex_hull(T: IntervalTable, S: VertexSet) -> HullTrace:
    _members(T, S)
    return HullTrace(tuple(VertexSet(T.n, m) for m in T.hull_stage_masks(S.mask)))


def is_geodetic(T: IntervalTable, S: VertexSet) -> bool:
    return T.closure_mask(_members(T, S)) == T.full_mask


def is_hull(T: IntervalTable, S: VertexSet) -> bool:
    _members(T, S)
    return T.spans(S.mask)


def is_convex(T: IntervalTable, S: VertexSet) -> bool:
    return T.closure_mask(_members(T, S)) == S.mask


def simplicial_vertices(G: Graph) -> VertexSet:
    """Ext(G): vertices whose neighbourhood induces a complete graph."""
    adj = G.adjacency_masks
    mask = 0
    for v in range(G.n):
        nv = adj[v]
        if all((nv & ~(1 << u)) & ~adj[u] == 0 for u in iter_bits(nv)):
            mask |= 1 << v
    return VertexSet(G.n, mask)


def is_extreme_geodesic(G: Graph, T: IntervalTable | None = None) -> bool:
    ext = simplicial_vertices(G)
    if not ext:
        return False
    return is_geodetic(T or IntervalTable(G), ext)


def condition_A(T: IntervalTable, S: VertexSet) -> bool:
    """Every x in S lies in I[y, z] for two other members y, z of S."""
    members = _members(T, S)
    masks = T.masks
    for x in members:
        rest = [y for y in members if y != x]
        if not any(masks[y][z] >> x & 1 for y, z in itertools.combinations(rest, 2)):
            return False
    return True


def isolated_members(T: IntervalTable, S: VertexSet) -> list[int]:
    """Members x of S with x outside I[S - x]."""
    members = _members(T, S)
    return [x for x in members if not T.closure_mask(y for y in members if y != x) >> x & 1]


def condition_B(T: IntervalTable, S: VertexSet) -> bool:
    """At least two members x of S lie outside I[S - x]."""
    if len(S) < 2:
        raise TooSmall("condition (B) needs at least two vertices")
    return len(isolated_members(T, S)) >= 2

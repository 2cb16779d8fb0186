"""Immutable simple connected graphs, hop distances and bit-vector vertex sets.

Vertices are the dense indices ``0..n-1``; labels are only used for display.
Sets of vertices are stored as Python integers used as bit vectors, which
keeps union/intersection/membership cheap for the closure-heavy solvers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Iterator, Sequence

import numpy as np

from .errors import Disconnected, OutOfRange, ParseError, SelfLoop


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class VertexSet:
    """A subset of ``range(universe_size)`` backed by an integer bit mask."""

    __slots__ = ("universe_size", "mask")

    def __init__(self, universe_size: int, mask: int = 0) -> None:
        if mask < 0 or mask >> universe_size:
            raise OutOfRange(f"mask has members outside [0, {universe_size})")
        object.__setattr__(self, "universe_size", universe_size)
        object.__setattr__(self, "mask", mask)

    def __setattr__(self, name, value):
        raise AttributeError("VertexSet is immutable")

    @classmethod
    def of(cls, universe_size: int, members: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in members:
            if not 0 <= v < universe_size:
                raise OutOfRange(f"vertex {v} outside [0, {universe_size})")
            mask |= 1 << v
        return cls(universe_size, mask)

    @classmethod
    def full(cls, universe_size: int) -> "VertexSet":
        return cls(universe_size, (1 << universe_size) - 1)

    @classmethod
    def empty(cls, universe_size: int) -> "VertexSet":
        return cls(universe_size, 0)

    def _check(self, other: "VertexSet") -> None:
        if not isinstance(other, VertexSet):
            raise TypeError(f"expected VertexSet, got {type(other).__name__}")
        if other.universe_size != self.universe_size:
            raise ValueError("vertex sets over different universes")

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.universe_size and bool(self.mask >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.universe_size, self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.universe_size, self.mask & other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.universe_size, self.mask & ~other.mask)

    def __xor__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.universe_size, self.mask ^ other.mask)

    def __invert__(self) -> "VertexSet":
        return VertexSet(self.universe_size, ~self.mask & ((1 << self.universe_size) - 1))

    def __le__(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def __ge__(self, other: "VertexSet") -> bool:
        return other <= self

    def __lt__(self, other: "VertexSet") -> bool:
        return self <= other and self.mask != other.mask

    def __gt__(self, other: "VertexSet") -> bool:
        return other < self

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.universe_size == other.universe_size and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((self.universe_size, self.mask))

    def __repr__(self) -> str:
        return f"VertexSet({self.universe_size}, {{{', '.join(map(str, self))}}})"

    def add(self, v: int) -> "VertexSet":
        return VertexSet.of(self.universe_size, [*self, v])

    def to_list(self) -> list[int]:
        return list(self)

    def is_full(self) -> bool:
        return self.mask == (1 << self.universe_size) - 1


@dataclass(frozen=True)
class DistanceMatrix:
    dist: np.ndarray  # (n, n) uint16 hop counts
    ecc: tuple[int, ...]
    diameter: int
    radius: int

    def __call__(self, u: int, v: int) -> int:
        return int(self.dist[u, v])


class Graph:
    """A finite, simple, connected graph on the vertices ``0..n-1``.

    Construct through :func:`build_graph`, which validates its input.
    """

    def __init__(self, n: int, adj: Sequence[int], labels: Sequence[Hashable] | None = None) -> None:
        self.n = n
        self._adj = tuple(adj)
        self.labels = tuple(labels) if labels is not None else tuple(range(n))

    @property
    def adjacency_masks(self) -> tuple[int, ...]:
        return self._adj

    def adjacent(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self._adj[u] >> (u + 1) << (u + 1))]

    @cached_property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)

    def vertex_set(self, members: Iterable[int]) -> VertexSet:
        return VertexSet.of(self.n, members)

    @cached_property
    def distances(self) -> DistanceMatrix:
        return all_pairs_distances(self)

    def dist(self, u: int, v: int) -> int:
        return int(self.distances.dist[u, v])

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise OutOfRange(f"vertex {v} outside [0, {self.n})")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def build_graph(n: int, edges: Iterable[tuple[int, int]], labels: Sequence[Hashable] | None = None) -> Graph:
    """Build a validated graph; duplicate edges are collapsed.

    Raises OutOfRange, SelfLoop or Disconnected on bad input.
    """
    if n < 1:
        raise OutOfRange("a graph needs at least one vertex")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRange(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    if labels is not None and len(labels) != n:
        raise ValueError(f"expected {n} labels, got {len(labels)}")
    reached = _reach(adj, 0)
    if reached != (1 << n) - 1:
        missing = next(iter_bits(~reached & ((1 << n) - 1)))
        raise Disconnected(f"vertex {missing} is not reachable from vertex 0")
    return Graph(n, adj, labels)


def _reach(adj: Sequence[int], source: int) -> int:
    seen = frontier = 1 << source
    while frontier:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= adj[u]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def bfs_row(adj: Sequence[int], source: int, n: int) -> list[int]:
    row = [0] * n
    seen = frontier = 1 << source
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= adj[u]
        frontier = nxt & ~seen
        seen |= frontier
        for v in iter_bits(frontier):
            row[v] = d
    return row


def all_pairs_distances(G: Graph) -> DistanceMatrix:
    """Breadth-first hop counts from every source, plus eccentricities."""
    n = G.n
    dist = np.array([bfs_row(G.adjacency_masks, s, n) for s in range(n)], dtype=np.uint16)
    ecc = tuple(int(e) for e in dist.max(axis=1))
    dist.setflags(write=False)
    return DistanceMatrix(dist=dist, ecc=ecc, diameter=max(ecc), radius=min(ecc))


def neighbors(G: Graph, v: int) -> VertexSet:
    G._check_vertex(v)
    return VertexSet(G.n, G.adjacency_masks[v])


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header + ``m`` lines of ``u v`` edge-list format."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError("empty edge list", expected=["'n m' header"])
    def ints(line: str, lineno: int) -> tuple[int, int]:
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(f"line {lineno}: expected two non-negative integers", line, 0)
        return int(parts[0]), int(parts[1])

    n, m = ints(lines[0], 1)
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header declares {m} edges but {len(body)} lines follow")
    edges = [ints(line, i + 2) for i, line in enumerate(body)]
    return build_graph(n, edges)


def format_edge_list(G: Graph) -> str:
    edges = G.edges()
    return "".join([f"{G.n} {len(edges)}\n", *(f"{u} {v}\n" for u, v in edges)])

"""Exact geodetic and hull numbers by iterative deepening.

For each candidate size k (from max(|Ext(G)|, 1) up to the greedy bound)
the k-subsets containing the forced vertices are enumerated in
lexicographic order, so the first hit is the lexicographically smallest
optimal set and exhausting level k - 1 certifies optimality.

The geodetic search prunes a partial set S whose most generous completion
(S plus every remaining candidate) still leaves a vertex outside its
closure, and finishes the last one or two picks with vectorised numpy
checks over all remaining candidates at once.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator

import numpy as np

from .convexity import IntervalTable, convex_hull, simplicial_vertices
from .errors import TimeLimit
from .graph import VertexSet, iter_bits

DEFAULT_TIME_LIMIT = 300.0


class Mode(str, Enum):
    GEODETIC = "geodetic"
    HULL = "hull"


@dataclass
class SolveOptions:
    mode: Mode = Mode.GEODETIC
    time_limit: float | None = DEFAULT_TIME_LIMIT
    must_include: VertexSet | None = None
    parallel_width: int = 1


@dataclass
class SearchStats:
    nodes: int = 0
    seconds: float = 0.0


@dataclass
class SolveResult:
    mode: Mode
    value: int
    witness: VertexSet
    certificate: object
    stats: SearchStats = field(default_factory=SearchStats)
    optimal: bool = True


class _Timeout(Exception):
    pass


def _or_reduce(arr: np.ndarray, axis: int = 0) -> np.ndarray:
    return np.bitwise_or.reduce(arr, axis=axis)


class _GeodeticSearch:
    """Lexicographic k-subset search for geodetic sets containing ``forced``."""

    def __init__(self, table: IntervalTable, forced: list[int], deadline: float | None) -> None:
        self.table = table
        self.words = table.words
        self.full = table.full_words
        self.forced = forced
        forced_set = set(forced)
        self.cand = [v for v in range(table.n) if v not in forced_set]
        self.deadline = deadline
        self.nodes = 0
        n, w = table.n, table.word_count
        cand = np.array(self.cand, dtype=np.intp)
        self.cand_arr = cand
        # suffix_closure[i] = I[cand[i:]]
        m = len(self.cand)
        suffix = np.zeros((m + 1, w), dtype=np.uint64)
        reach = np.zeros((n, w), dtype=np.uint64)
        for i in range(m - 1, -1, -1):
            x = self.cand[i]
            reach = reach | self.words[:, x]
            suffix[i] = suffix[i + 1] | reach[x]
        self.suffix_closure = suffix
        base_cov = np.zeros((n, w), dtype=np.uint64)
        for s in forced:
            base_cov |= self.words[:, s]
        self.base_cov = base_cov
        self.base_closure = np.array(
            [0] * w, dtype=np.uint64) if not forced else _or_reduce(base_cov[forced])

    def _is_full(self, words: np.ndarray) -> bool:
        return bool(np.array_equal(words, self.full))

    def _tick(self) -> None:
        self.nodes += 1
        if self.deadline is not None and self.nodes % 64 == 0 and time.perf_counter() > self.deadline:
            raise _Timeout

    def solutions(self, k: int, first: int | None = None) -> Iterator[tuple[int, ...]]:
        """Yield every geodetic k-set (sorted tuples, lexicographic order).

        ``first`` restricts the search to sets whose smallest non-forced
        member is ``cand[first]``; used to fan the top level out to workers.
        """
        r = k - len(self.forced)
        if r < 0:
            return
        if r == 0:
            if self._is_full(self.base_closure):
                yield tuple(self.forced)
            return
        if first is None:
            yield from self._dfs(0, [], self.base_closure, self.base_cov, r)
            return
        x = self.cand[first]
        cov = self.base_cov | self.words[:, x]
        closure = self.base_closure | cov[x]
        if r == 1:
            if self._is_full(closure):
                yield self._emit([x])
            return
        yield from self._dfs(first + 1, [x], closure, cov, r - 1)

    def _emit(self, picks: list[int]) -> tuple[int, ...]:
        return tuple(sorted(self.forced + picks))

    def _dfs(self, start: int, picks: list[int], closure: np.ndarray, cov: np.ndarray, r: int):
        self._tick()
        remaining = self.cand_arr[start:]
        if len(remaining) < r:
            return
        widest = closure | _or_reduce(cov[remaining]) | self.suffix_closure[start]
        if not self._is_full(widest):
            return
        if r == 1:
            totals = closure | cov[remaining] | self.words[remaining, remaining]
            hits = np.flatnonzero(np.all(totals == self.full, axis=1))
            for i in hits:
                yield self._emit(picks + [int(remaining[i])])
            return
        if r == 2:
            base = closure | cov[remaining]
            totals = base[:, None, :] | base[None, :, :] | self.words[np.ix_(remaining, remaining)]
            ok = np.all(totals == self.full, axis=2)
            ok = np.triu(ok, 1)
            for i, j in np.argwhere(ok):
                yield self._emit(picks + [int(remaining[i]), int(remaining[j])])
            return
        last = len(self.cand) - r
        for j in range(start, last + 1):
            x = self.cand[j]
            child_cov = cov | self.words[:, x]
            child_closure = closure | child_cov[x]
            # any later sibling's best completion is contained in this child's
            widest = child_closure | _or_reduce(child_cov[self.cand_arr[j + 1:]]) | self.suffix_closure[j + 1]
            if not self._is_full(widest):
                return
            yield from self._dfs(j + 1, picks + [x], child_closure, child_cov, r - 1)


class _HullSearch:
    def __init__(self, table: IntervalTable, forced: list[int], deadline: float | None) -> None:
        self.table = table
        self.forced = forced
        forced_set = set(forced)
        self.cand = [v for v in range(table.n) if v not in forced_set]
        self.forced_mask = sum(1 << v for v in forced)
        self.deadline = deadline
        self.nodes = 0

    def _tick(self) -> None:
        self.nodes += 1
        if self.deadline is not None and self.nodes % 64 == 0 and time.perf_counter() > self.deadline:
            raise _Timeout

    def solutions(self, k: int, first: int | None = None) -> Iterator[tuple[int, ...]]:
        r = k - len(self.forced)
        if r < 0:
            return
        if first is None:
            yield from self._dfs(0, self.forced_mask, r)
        else:
            yield from self._dfs(first + 1, self.forced_mask | 1 << self.cand[first], r - 1)

    def _dfs(self, start: int, mask: int, r: int):
        self._tick()
        if r == 0:
            if self.table.spans(mask):
                yield tuple(iter_bits(mask))
            return
        for j in range(start, len(self.cand) - r + 1):
            yield from self._dfs(j + 1, mask | 1 << self.cand[j], r - 1)


def _make_search(mode: Mode, table, forced, deadline):
    cls = _GeodeticSearch if mode is Mode.GEODETIC else _HullSearch
    return cls(table, forced, deadline)


# worker-process state for the parallel fan-out
_WORKER: dict = {}


def _worker_init(mode, table, forced, deadline) -> None:
    _WORKER["search"] = _make_search(mode, table, forced, deadline)


def _worker_first(args) -> tuple[tuple[int, ...] | None, int, bool]:
    k, first = args
    search = _WORKER["search"]
    before = search.nodes
    try:
        hit = next(search.solutions(k, first), None)
    except _Timeout:
        return None, search.nodes - before, True
    return hit, search.nodes - before, False


def greedy_upper_bound(table: IntervalTable, mode: Mode | str) -> VertexSet:
    """A valid geodetic (or hull) set built greedily from Ext(G).

    Each step adds the vertex that enlarges the closure (or hull) the most,
    ties going to the lowest index.
    """
    mode = Mode(mode)
    n, full = table.n, table.full_mask
    chosen = simplicial_vertices(table.graph).mask

    def span(mask: int) -> int:
        if not mask:
            return 0
        if mode is Mode.GEODETIC:
            return table.closure_mask(iter_bits(mask))
        return table.hull_stage_masks(mask)[-1]

    current = span(chosen)
    while current != full:
        best, best_gain = -1, -1
        for v in range(n):
            if chosen >> v & 1:
                continue
            gain = (span(chosen | 1 << v) & ~current).bit_count()
            if gain > best_gain:
                best, best_gain = v, gain
        chosen |= 1 << best
        current = span(chosen)
    return VertexSet(n, chosen)


def geodetic_certificate(table: IntervalTable, S: VertexSet) -> dict[int, tuple[int, int]]:
    """For every vertex w, the first pair (u, v) of S with w in I[u, v]."""
    members = list(S)
    cert: dict[int, tuple[int, int]] = {}
    for i, u in enumerate(members):
        for v in members[i:]:
            for w in iter_bits(table.masks[u][v]):
                cert.setdefault(w, (u, v))
    return dict(sorted(cert.items()))


def _solve(table: IntervalTable, opts: SolveOptions, mode: Mode) -> SolveResult:
    started = time.perf_counter()
    deadline = None if opts.time_limit is None else started + opts.time_limit
    forced_set = opts.must_include if opts.must_include is not None else simplicial_vertices(table.graph)
    forced = list(forced_set)
    upper = greedy_upper_bound(table, mode)
    if opts.must_include is not None and not forced_set <= upper:
        upper = VertexSet(table.n, upper.mask | forced_set.mask)
    stats = SearchStats()
    search = _make_search(mode, table, forced, deadline)
    witness = None
    try:
        for k in range(max(len(forced), 1), len(upper) + 1):
            witness = _first_solution(search, table, opts, mode, forced, deadline, k, stats)
            if witness is not None:
                break
    except _Timeout:
        stats.nodes += search.nodes
        stats.seconds = time.perf_counter() - started
        best = _result(table, mode, upper, stats, optimal=False)
        raise TimeLimit(f"{mode.value} search exceeded {opts.time_limit} s", best=best) from None
    stats.nodes += search.nodes
    stats.seconds = time.perf_counter() - started
    if witness is None:  # must_include larger than every smaller candidate
        witness = upper
    return _result(table, mode, witness, stats, optimal=True)


def _first_solution(search, table, opts, mode, forced, deadline, k, stats) -> VertexSet | None:
    width = opts.parallel_width
    r = k - len(forced)
    if width <= 1 or r < 3:
        hit = next(search.solutions(k), None)
        return None if hit is None else VertexSet.of(table.n, hit)
    firsts = [(k, i) for i in range(len(search.cand) - r + 1)]
    with ProcessPoolExecutor(max_workers=width, initializer=_worker_init,
                             initargs=(mode, table, forced, deadline)) as pool:
        found = None
        timed_out = False
        for hit, nodes, late in pool.map(_worker_first, firsts):
            stats.nodes += nodes
            timed_out |= late
            if timed_out:
                break
            if hit is not None:
                found = hit
                break
        pool.shutdown(wait=True, cancel_futures=True)
    if timed_out:
        raise _Timeout
    return None if found is None else VertexSet.of(table.n, found)


def _result(table, mode, witness: VertexSet, stats, optimal: bool) -> SolveResult:
    if mode is Mode.GEODETIC:
        certificate = geodetic_certificate(table, witness)
    else:
        certificate = convex_hull(table, witness)
    return SolveResult(mode, len(witness), witness, certificate, stats, optimal)


def geodetic_number(table: IntervalTable, opts: SolveOptions | None = None) -> SolveResult:
    opts = opts or SolveOptions(mode=Mode.GEODETIC)
    if Mode(opts.mode) is not Mode.GEODETIC:
        raise ValueError("geodetic_number needs mode=GEODETIC")
    return _solve(table, opts, Mode.GEODETIC)


def hull_number(table: IntervalTable, opts: SolveOptions | None = None) -> SolveResult:
    opts = opts or SolveOptions(mode=Mode.HULL)
    if Mode(opts.mode) is not Mode.HULL:
        raise ValueError("hull_number needs mode=HULL")
    return _solve(table, opts, Mode.HULL)


def optimal_sets(table: IntervalTable, mode: Mode | str, value: int | None = None,
                 time_limit: float | None = DEFAULT_TIME_LIMIT) -> list[VertexSet]:
    """Every minimum geodetic (or hull) set, in lexicographic order."""
    mode = Mode(mode)
    if value is None:
        solve = geodetic_number if mode is Mode.GEODETIC else hull_number
        value = solve(table, SolveOptions(mode=mode, time_limit=time_limit)).value
    deadline = None if time_limit is None else time.perf_counter() + time_limit
    forced = list(simplicial_vertices(table.graph))
    search = _make_search(mode, table, forced, deadline)
    try:
        return [VertexSet.of(table.n, s) for s in search.solutions(value)]
    except _Timeout:
        raise TimeLimit(f"enumerating optimal {mode.value} sets exceeded {time_limit} s") from None



@dataclass
class BoundCheck:
    applicable: bool
    holds: bool
    lhs: int
    rhs: int

    @property
    def slack(self) -> int:
        return self.rhs - self.lhs


@dataclass
class BoundsReport:
    values: dict[str, int]
    checks: dict[str, BoundCheck]

    @property
    def passed(self) -> bool:
        return all(c.holds for c in self.checks.values() if c.applicable)


def bounds_report(G, H, time_limit: float | None = DEFAULT_TIME_LIMIT) -> BoundsReport:
    """Solve both factors and their strong product, then test every bound
    relating g and h of the product to those of the factors."""
    from .product import strong_product

    P = strong_product(G, H)
    tables = {"G": IntervalTable(G), "H": IntervalTable(H), "GxH": IntervalTable(P.graph)}
    values: dict[str, int] = {}
    for key, table in tables.items():
        values[f"g({key})"] = geodetic_number(table, SolveOptions(Mode.GEODETIC, time_limit)).value
        values[f"h({key})"] = hull_number(table, SolveOptions(Mode.HULL, time_limit)).value
    gG, gH, gP = values["g(G)"], values["g(H)"], values["g(GxH)"]
    hG, hH, hP = values["h(G)"], values["h(H)"], values["h(GxH)"]
    nontrivial = G.n > 1 and H.n > 1
    ext_g_empty = not simplicial_vertices(G)
    ext_h_empty = not simplicial_vertices(H)

    def le(lhs: int, rhs: int, applicable: bool = True) -> BoundCheck:
        return BoundCheck(applicable, lhs <= rhs, lhs, rhs)

    checks = {
        "g_lower": le(min(gG, gH), gP),
        "g_upper": le(gP, gG * gH),
        "g_at_least_4": le(4, gP, nontrivial),
        "h_lower": le(2, hP, nontrivial),
        "h_upper": le(hP, hG * hH),
        "h_le_h(G)_when_Ext(G)_empty": le(hP, hG, ext_g_empty),
        "h_le_h(H)_when_Ext(H)_empty": le(hP, hH, ext_h_empty),
        "h_le_g": le(hP, gP),
    }
    return BoundsReport(values, checks)


@dataclass
class CollapseReport:
    g_factor: int
    g_product: int
    clique_order: int
    hypothesis_holds: bool
    witness: VertexSet | None
    layers_geodetic: bool | None = None
    evidence: dict | None = None

    @property
    def passed(self) -> bool:
        ok = self.layers_geodetic is not False
        if self.hypothesis_holds:
            ok = ok and self.g_product == self.g_factor
        if self.evidence is not None:
            ok = ok and self.evidence["layers_geodetic"] and self.g_product <= self.evidence["size"]
        return ok


def verify_condition_A_collapse(G, n: int, evidence: VertexSet | None = None,
                                time_limit: float | None = DEFAULT_TIME_LIMIT,
                                strict: bool = False) -> CollapseReport:
    """Check g(G x K_n) = g(G) when some minimum geodetic set of G satisfies (A).

    All minimum geodetic sets of G are enumerated; when none satisfies (A)
    the product is still solved and reported, but nothing is asserted
    (``strict`` turns that case into HypothesisFails). ``evidence`` may
    supply a non-minimum geodetic set with (A); its layers S x {k} give the
    upper bound g(G x K_n) <= |S|.
    """
    from .convexity import condition_A, is_geodetic
    from .errors import FormulaViolation, HypothesisFails
    from .families import complete, make_family
    from .product import strong_product

    TG = IntervalTable(G)
    g_factor = geodetic_number(TG, SolveOptions(Mode.GEODETIC, time_limit)).value
    witness = next((S for S in optimal_sets(TG, Mode.GEODETIC, g_factor, time_limit) if condition_A(TG, S)), None)
    P = strong_product(G, make_family(complete(n)))
    TP = IntervalTable(P.graph)
    g_product = geodetic_number(TP, SolveOptions(Mode.GEODETIC, time_limit)).value

    def layers_ok(S: VertexSet) -> bool:
        return all(is_geodetic(TP, P.vertex_set((s, k) for s in S)) for k in range(n))

    report = CollapseReport(g_factor, g_product, n, witness is not None, witness)
    if witness is not None:
        report.layers_geodetic = layers_ok(witness)
    if evidence is not None:
        report.evidence = {
            "size": len(evidence),
            "geodetic": is_geodetic(TG, evidence),
            "condition_A": condition_A(TG, evidence),
            "layers_geodetic": layers_ok(evidence),
        }
    if witness is None and strict:
        raise HypothesisFails("no minimum geodetic set satisfies condition (A)", report=report)
    if witness is not None and not report.passed:
        raise FormulaViolation(f"g(G x K_{n}) = {g_product} but g(G) = {g_factor}")
    return report

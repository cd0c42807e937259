"""Domination, defensive k-alliances, and exact solvers for their minimum sizes.

A set S is a defensive k-alliance when every v in S has at least k more
neighbours inside S than outside it. Since ``|N_S(v)| + |N_out(v)| = deg(v)``
this is the same as ``|N_S(v)| >= ceil((deg(v) + k) / 2)``, which is the form
the search uses. A global defensive k-alliance must also dominate the graph.

The solvers enumerate candidate sets by increasing cardinality and, inside a
cardinality, in lexicographic order of the sorted member list, so the first
hit is the lexicographically smallest minimum set. Vertex sets are Python
ints used as bitsets; the n ≤ 64 cap mirrors the one-word bitset layout.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator

from .graph import Graph, VertexSet, as_vertex_set
from .values import INF, AllianceValue

SOLVER_MAX_N = 64


class SolverCapError(ValueError):
    """The graph is larger than the exact solvers accept."""


class EmptySetError(ValueError):
    """Alliance predicates are only defined for nonempty sets."""


@dataclass(frozen=True)
class SolveResult:
    value: AllianceValue
    witness: VertexSet | None
    nodes_explored: int = 0

    def to_dict(self) -> dict:
        return {
            "value": self.value.to_json(),
            "witness": None if self.witness is None else self.witness.sorted(),
            "nodes_explored": self.nodes_explored,
        }


def required_inside(degree: int, k: int) -> int:
    """Least number of neighbours that must lie inside S for a member of degree ``degree``."""
    return max(0, -(-(degree + k) // 2))


# -- predicates ---------------------------------------------------------------


def is_dominating(graph: Graph, s: VertexSet | Iterable[int]) -> bool:
    members = as_vertex_set(graph, s).members
    return all(v in members or graph.neighbors(v) & members for v in graph.vertices())


def is_defensive_k_alliance(graph: Graph, s: VertexSet | Iterable[int], k: int) -> bool:
    members = as_vertex_set(graph, s).members
    if not members:
        raise EmptySetError("a defensive alliance must be a nonempty set")
    for v in members:
        inside = len(graph.neighbors(v) & members)
        if inside < graph.degree(v) - inside + k:
            return False
    return True


def is_gdka(graph: Graph, s: VertexSet | Iterable[int], k: int) -> bool:
    """Global defensive k-alliance: a defensive k-alliance that dominates."""
    return is_defensive_k_alliance(graph, s, k) and is_dominating(graph, s)


# -- exact search -------------------------------------------------------------


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _peel(masks: tuple[int, ...], need: tuple[int, ...], candidates: int) -> int:
    """Largest subset A of ``candidates`` where every member has its quota of neighbours in A.

    Every defensive alliance lies inside it, and it is itself one when nonempty.
    """
    core = candidates
    changed = True
    while changed:
        changed = False
        for v in _bits(core):
            if (masks[v] & core).bit_count() < need[v]:
                core &= ~(1 << v)
                changed = True
    return core


class _Search:
    """Fixed-cardinality depth-first search over subsets of the alliance core."""

    def __init__(self, graph: Graph, need: tuple[int, ...], dominate: bool, core: int) -> None:
        self.n = graph.n
        self.masks = graph.masks
        self.closed = tuple(m | (1 << v) for v, m in enumerate(graph.masks))
        self.need = need
        self.dominate = dominate
        self.core = core
        self.full = (1 << graph.n) - 1
        self.reach = graph.max_degree + 1
        self.nodes = 0

    def first_choices(self, size: int) -> list[int]:
        return [j for j in _bits(self.core) if (self.core >> j).bit_count() >= size]

    def run(self, size: int, first: int | None = None) -> Iterator[int]:
        if first is None:
            yield from self._dfs(0, 0, 0, 0, size)
        elif self._admissible(first, 0, size):
            yield from self._dfs(first + 1, 1 << first, 1, self.closed[first], size)

    def _admissible(self, j: int, chosen: int, size: int) -> bool:
        later = self.core >> (j + 1) << (j + 1)
        rest = size - chosen.bit_count() - 1
        have = (self.masks[j] & chosen).bit_count()
        return have + min(rest, (self.masks[j] & later).bit_count()) >= self.need[j]

    def _dfs(self, pos: int, chosen: int, count: int, dom: int, size: int) -> Iterator[int]:
        self.nodes += 1
        left = size - count
        masks, need = self.masks, self.need
        if left == 0:
            if self.dominate and dom != self.full:
                return
            for v in _bits(chosen):
                if (masks[v] & chosen).bit_count() < need[v]:
                    return
            yield chosen
            return

        after = self.core >> pos << pos
        if after.bit_count() < left:
            return
        limit = self.n - 1
        for v in _bits(chosen):
            deficit = need[v] - (masks[v] & chosen).bit_count()
            if deficit > 0:
                avail = masks[v] & after
                if deficit > left or avail.bit_count() < deficit:
                    return
                limit = min(limit, avail.bit_length() - 1)
        if self.dominate:
            undominated = self.full & ~dom
            if undominated:
                if undominated.bit_count() > left * self.reach:
                    return
                for u in _bits(undominated):
                    cover = self.closed[u] & after
                    if not cover:
                        return
                    limit = min(limit, cover.bit_length() - 1)

        cand = after & ((1 << (limit + 1)) - 1)
        while cand:
            low = cand & -cand
            j = low.bit_length() - 1
            if (after >> j).bit_count() < left:
                break
            if self._admissible(j, chosen, size):
                yield from self._dfs(j + 1, chosen | low, count + 1, dom | self.closed[j], size)
            cand ^= low


def _check_size(graph: Graph) -> None:
    if graph.n < 1:
        raise ValueError("solvers need a graph with at least one vertex")
    if graph.n > SOLVER_MAX_N:
        raise SolverCapError(f"exact solvers are limited to n ≤ {SOLVER_MAX_N}, got n = {graph.n}")


def _first_from(args: tuple[Graph, tuple[int, ...], bool, int, int, int]) -> tuple[int | None, int]:
    graph, need, dominate, core, size, first = args
    search = _Search(graph, need, dominate, core)
    hit = next(search.run(size, first), None)
    return hit, search.nodes


def _minimum(graph: Graph, need: tuple[int, ...], dominate: bool, workers: int = 1) -> SolveResult:
    _check_size(graph)
    core = _peel(graph.masks, need, (1 << graph.n) - 1)
    search = _Search(graph, need, dominate, core)
    if core == 0 or (dominate and not _dominates(search, core)):
        return SolveResult(INF, None, 0)
    low = math.ceil(graph.n / search.reach) if dominate else 1
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    nodes = 0
    try:
        for size in range(max(1, low), core.bit_count() + 1):
            if pool is None:
                hit = next(search.run(size), None)
                nodes = search.nodes
            else:
                jobs = [(graph, need, dominate, core, size, j) for j in search.first_choices(size)]
                results = list(pool.map(_first_from, jobs))
                nodes += sum(r[1] for r in results)
                # jobs are ordered by first member, so the first hit is lexicographically smallest
                hit = next((r[0] for r in results if r[0] is not None), None)
            if hit is not None:
                return SolveResult(AllianceValue(size), VertexSet.from_mask(hit, graph.n), nodes)
    finally:
        if pool is not None:
            pool.shutdown()
    raise AssertionError("the alliance core qualifies, so the search cannot come up empty")


def _dominates(search: _Search, s: int) -> bool:
    dom = 0
    for v in _bits(s):
        dom |= search.closed[v]
    return dom == search.full


def _needs(graph: Graph, k: int) -> tuple[int, ...]:
    return tuple(required_inside(d, k) for d in graph.degrees)


def domination_number(graph: Graph, workers: int = 1) -> SolveResult:
    return _minimum(graph, (0,) * graph.n, True, workers)


def gdka_number(graph: Graph, k: int, workers: int = 1) -> SolveResult:
    """Minimum global defensive k-alliance; infinite when none exists."""
    return _minimum(graph, _needs(graph, k), True, workers)


def dka_number(graph: Graph, k: int, workers: int = 1) -> SolveResult:
    """Minimum defensive k-alliance (no domination requirement)."""
    return _minimum(graph, _needs(graph, k), False, workers)


def minimum_gdkas(graph: Graph, k: int) -> Iterator[VertexSet]:
    """Every minimum global defensive k-alliance, in lexicographic order."""
    best = gdka_number(graph, k)
    if best.value.is_infinite:
        return
    need = _needs(graph, k)
    core = _peel(graph.masks, need, (1 << graph.n) - 1)
    for hit in _Search(graph, need, True, core).run(int(best.value)):
        yield VertexSet.from_mask(hit, graph.n)


def find_1_perfect_code(graph: Graph) -> VertexSet | None:
    """A set whose closed neighbourhoods partition V, or None.

    Exact-cover search: branch on the smallest uncovered vertex over the
    members of its closed neighbourhood whose ball is still disjoint from
    what is covered.
    """
    _check_size(graph)
    closed = [m | (1 << v) for v, m in enumerate(graph.masks)]
    full = (1 << graph.n) - 1

    def cover(covered: int, code: int) -> int | None:
        if covered == full:
            return code
        free = ~covered & full
        u = (free & -free).bit_length() - 1
        for d in _bits(closed[u]):
            if not closed[d] & covered:
                found = cover(covered | closed[d], code | (1 << d))
                if found is not None:
                    return found
        return None

    code = cover(0, 0)
    return None if code is None else VertexSet.from_mask(code, graph.n)


def is_1_perfect_code(graph: Graph, d: VertexSet | Iterable[int]) -> bool:
    members = as_vertex_set(graph, d).sorted()
    seen: set[int] = set()
    for v in members:
        ball = graph.neighbors(v) | {v}
        if ball & seen:
            return False
        seen |= ball
    return len(seen) == graph.n

"""Named graph families.

Numbering:
  path / cycle    consecutive ids along the path or cycle
  complete/empty  0..n-1
  sun n           edge corona C_n ◇ K_1: cycle vertices 0..n-1, then one apex per
                  cycle edge in sorted edge order
  truncated_cube  vertex 3*c + i is the corner of cube vertex c (0..7) pointing
                  along axis i; corners of one cube vertex form a triangle
  g12             8-cycle 0..7, apex 8+i adjacent to 2i and 2i+1 (i = 0..3);
                  distinguished set U = {8, 9, 10, 11}
"""

from __future__ import annotations

import itertools
from typing import Iterator

from .graph import Graph, GraphError, VertexSet

FAMILIES = ("path", "cycle", "complete", "empty", "sun", "truncated_cube", "g12")

_ALIASES = {"P": "path", "C": "cycle", "K": "complete", "E": "empty", "S": "sun"}


class UnknownFamily(GraphError):
    pass


def path(n: int) -> Graph:
    _at_least("path", n, 1)
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _at_least("cycle", n, 3)
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _at_least("complete", n, 1)
    return Graph(n, itertools.combinations(range(n), 2))


def empty(n: int) -> Graph:
    _at_least("empty", n, 1)
    return Graph(n)


def sun(n: int) -> Graph:
    _at_least("sun", n, 3)
    from .products import edge_corona

    return edge_corona(cycle(n), Graph(1)).graph


def truncated_cube() -> Graph:
    edges = []
    for c in range(8):
        edges += [(3 * c, 3 * c + 1), (3 * c + 1, 3 * c + 2), (3 * c, 3 * c + 2)]
        for axis in range(3):
            d = c ^ (1 << axis)
            if c < d:
                edges.append((3 * c + axis, 3 * d + axis))
    return Graph(24, edges)


def g12() -> tuple[Graph, VertexSet]:
    """The order-12 factor whose hierarchical product with P_2 is the truncated cube."""
    edges = [(i, (i + 1) % 8) for i in range(8)]
    for i in range(4):
        edges += [(8 + i, 2 * i), (8 + i, 2 * i + 1)]
    return Graph(12, edges), VertexSet.of(range(8, 12), 12)


def _at_least(family: str, n: int, low: int) -> None:
    if n < low:
        raise GraphError(f"{family} requires n ≥ {low}")


def generate(family: str, *params: int) -> tuple[Graph, VertexSet | None]:
    """Build a named graph. Returns the graph and its distinguished set, if any."""
    family = _ALIASES.get(family, family)
    simple = {"path": path, "cycle": cycle, "complete": complete, "empty": empty, "sun": sun}
    if family in simple:
        if len(params) != 1:
            raise GraphError(f"{family} takes exactly one parameter n")
        return simple[family](int(params[0])), None
    if family == "truncated_cube":
        _no_params(family, params)
        return truncated_cube(), None
    if family == "g12":
        _no_params(family, params)
        return g12()
    raise UnknownFamily(f"unknown graph family {family!r}; choose from {', '.join(FAMILIES)}")


def _no_params(family: str, params: tuple[int, ...]) -> None:
    if params:
        raise GraphError(f"{family} takes no parameters")


def _canonical_key(n: int, edges: list[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    return min(
        tuple(sorted((min(p[u], p[v]), max(p[u], p[v])) for u, v in edges))
        for p in itertools.permutations(range(n))
    )


def _is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        for w in g.neighbors(stack.pop()):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def enumerate_graphs(n: int, connected: bool = False) -> Iterator[Graph]:
    """All graphs of order ``n`` up to isomorphism (brute force; n ≤ 5)."""
    if n > 5:
        raise GraphError("enumerate_graphs is brute force and limited to n ≤ 5")
    pairs = list(itertools.combinations(range(n), 2))
    seen: set[tuple[tuple[int, int], ...]] = set()
    found = []
    for bits in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
        key = _canonical_key(n, edges)
        if key in seen:
            continue
        seen.add(key)
        g = Graph(n, key)
        if connected and not _is_connected(g):
            continue
        found.append(g)
    found.sort(key=lambda g: (g.m, g.edges))
    return iter(found)

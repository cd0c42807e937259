"""Immutable simple graphs on dense integer vertex ids, and vertex subsets."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input (bad endpoints, loops, bad JSON)."""


class Graph:
    """An immutable simple undirected graph with vertices ``0..n-1``.

    Neighbor sets, neighbor bitmasks, degrees and the sorted edge list are
    computed once at construction.
    """

    __slots__ = ("n", "adjacency", "masks", "edges", "degrees", "min_degree", "max_degree")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        adjacency = tuple(frozenset(s) for s in nbrs)
        set_ = object.__setattr__
        set_(self, "n", n)
        set_(self, "adjacency", adjacency)
        set_(self, "masks", tuple(sum(1 << w for w in s) for s in adjacency))
        set_(self, "edges", tuple(sorted((u, v) for u in range(n) for v in adjacency[u] if u < v)))
        degrees = tuple(len(s) for s in adjacency)
        set_(self, "degrees", degrees)
        set_(self, "min_degree", min(degrees, default=0))
        set_(self, "max_degree", max(degrees, default=0))

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("Graph is immutable")

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def vertices(self) -> range:
        return range(self.n)

    def full_set(self) -> VertexSet:
        return VertexSet(frozenset(range(self.n)), self.n)

    def vertex_set(self, members: Iterable[int]) -> VertexSet:
        return VertexSet.of(members, self.n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __reduce__(self):
        return (Graph, (self.n, self.edges))

    def to_dict(self, distinguished: VertexSet | None = None) -> dict[str, Any]:
        out: dict[str, Any] = {"n": self.n, "edges": [list(e) for e in self.edges]}
        if distinguished is not None:
            out["set"] = sorted(distinguished)
        return out


@dataclass(frozen=True)
class VertexSet:
    """A subset of the vertices of a graph with ``universe`` vertices."""

    members: frozenset[int]
    universe: int

    def __post_init__(self) -> None:
        for v in self.members:
            if not 0 <= v < self.universe:
                raise GraphError(f"vertex {v} outside [0, {self.universe})")

    @classmethod
    def of(cls, members: Iterable[int], universe: int) -> VertexSet:
        return cls(frozenset(int(v) for v in members), universe)

    @classmethod
    def from_mask(cls, mask: int, universe: int) -> VertexSet:
        return cls(frozenset(v for v in range(universe) if mask >> v & 1), universe)

    @property
    def mask(self) -> int:
        return sum(1 << v for v in self.members)

    def complement(self) -> VertexSet:
        return VertexSet(frozenset(range(self.universe)) - self.members, self.universe)

    def sorted(self) -> list[int]:
        return sorted(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __contains__(self, v: object) -> bool:
        return v in self.members

    def __repr__(self) -> str:
        return f"VertexSet({sorted(self.members)}, universe={self.universe})"


def as_vertex_set(graph: Graph, s: VertexSet | Iterable[int]) -> VertexSet:
    """Coerce ``s`` to a VertexSet over ``graph``, checking the universe."""
    if isinstance(s, VertexSet):
        if s.universe != graph.n:
            raise GraphError(f"vertex set over {s.universe} vertices used with a graph of order {graph.n}")
        return s
    return VertexSet.of(s, graph.n)


def make_graph(n: int, edges: Sequence[tuple[int, int]] = ()) -> Graph:
    """Build a graph; duplicate edges collapse, loops and bad endpoints raise."""
    return Graph(n, edges)


def induced_subgraph(graph: Graph, x: VertexSet | Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Return ``graph<X>`` relabelled to ``0..|X|-1`` in increasing id order, and the old->new map."""
    xs = as_vertex_set(graph, x).sorted()
    relabel = {old: new for new, old in enumerate(xs)}
    edges = [(relabel[u], relabel[v]) for u, v in graph.edges if u in relabel and v in relabel]
    return Graph(len(xs), edges), relabel


def disjoint_union(*graphs: Graph) -> Graph:
    edges: list[tuple[int, int]] = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph(offset, edges)


def relabel(graph: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    if sorted(perm) != list(range(graph.n)):
        raise GraphError("relabelling must be a permutation of the vertex ids")
    return Graph(graph.n, [(perm[u], perm[v]) for u, v in graph.edges])


def graph_from_dict(data: dict[str, Any]) -> tuple[Graph, VertexSet | None]:
    """Parse the JSON graph format ``{"n", "edges", "set"?}``."""
    try:
        n = int(data["n"])
        edges = [(int(e[0]), int(e[1])) for e in data.get("edges", [])]
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise GraphError(f"malformed graph JSON: {exc}") from exc
    graph = Graph(n, edges)
    distinguished = None
    if data.get("set") is not None:
        distinguished = VertexSet.of(data["set"], n)
    return graph, distinguished


def graph_to_json(graph: Graph, distinguished: VertexSet | None = None) -> str:
    return json.dumps(graph.to_dict(distinguished))


def graph_from_json(text: str) -> tuple[Graph, VertexSet | None]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise GraphError("graph JSON must be an object")
    return graph_from_dict(data)

"""Graph products with stable vertex numbering and label maps.

Id layouts (part of the public contract, so witnesses are reproducible):

* cartesian / hierarchical / lexicographic: ``Pair(g, h)`` has id ``g * n(H) + h``.
* corona: ``Base(g)`` has id ``g``; ``VCopy(g, h)`` has id ``n(G) + g * n(H) + h``.
* edge corona: ``Base(g)`` has id ``g``; ``ECopy(i, h)`` has id
  ``n(G) + i * n(H) + h`` where ``i`` indexes ``G.edges`` (sorted (min, max) pairs).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, NamedTuple, Union

from .graph import Graph, GraphError, VertexSet, as_vertex_set


class Pair(NamedTuple):
    g: int
    h: int


class Base(NamedTuple):
    g: int


class VCopy(NamedTuple):
    g: int
    h: int


class ECopy(NamedTuple):
    e: int
    h: int


Label = Union[Pair, Base, VCopy, ECopy]

KINDS = ("cartesian", "hierarchical", "lexicographic", "corona", "edge_corona")

_LABEL_TYPES: dict[str, tuple[type, ...]] = {
    "cartesian": (Pair,),
    "hierarchical": (Pair,),
    "lexicographic": (Pair,),
    "corona": (Base, VCopy),
    "edge_corona": (Base, ECopy),
}

_LABEL_TAGS = {Pair: "pair", Base: "base", VCopy: "vcopy", ECopy: "ecopy"}


class ProductError(ValueError):
    pass


@dataclass(frozen=True)
class ProductGraph:
    graph: Graph
    labels: tuple[Label, ...]
    kind: str
    left: Graph
    right: Graph
    _ids: dict[Label, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ProductError(f"unknown product kind {self.kind!r}")
        if len(self.labels) != self.graph.n:
            raise ProductError("label map must cover every product vertex")
        ids = {lab: i for i, lab in enumerate(self.labels)}
        if len(ids) != len(self.labels):
            raise ProductError("label map is not injective")
        object.__setattr__(self, "_ids", ids)

    @property
    def n(self) -> int:
        return self.graph.n

    def id_of(self, label: Label) -> int:
        allowed = _LABEL_TYPES[self.kind]
        if not isinstance(label, allowed):
            raise ProductError(f"label {label!r} does not belong to a {self.kind} product")
        try:
            return self._ids[label]
        except KeyError:
            raise ProductError(f"label {label!r} not present in this product") from None

    def label_of(self, vid: int) -> Label:
        return self.labels[vid]

    def to_dict(self) -> dict[str, Any]:
        out = self.graph.to_dict()
        out["kind"] = self.kind
        out["labels"] = [[_LABEL_TAGS[type(lab)], *lab] for lab in self.labels]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _require_nonempty(*graphs: Graph) -> None:
    for g in graphs:
        if g.n < 1:
            raise ProductError("product factors must have at least one vertex")


def _pair_labels(g: Graph, h: Graph) -> tuple[Pair, ...]:
    return tuple(Pair(a, b) for a in range(g.n) for b in range(h.n))


def hierarchical(g: Graph, u: VertexSet | Iterable[int], h: Graph) -> ProductGraph:
    """Generalized hierarchical product ``G(U) ⊓ H``.

    ``(g, h) ~ (g', h')`` iff ``g = g' ∈ U`` and ``hh' ∈ E(H)``, or ``gg' ∈ E(G)`` and ``h = h'``.
    """
    _require_nonempty(g, h)
    uset = as_vertex_set(g, u)
    nh = h.n
    edges = [(a * nh + x, b * nh + x) for a, b in g.edges for x in range(nh)]
    edges += [(a * nh + x, a * nh + y) for a in sorted(uset) for x, y in h.edges]
    return ProductGraph(Graph(g.n * nh, edges), _pair_labels(g, h), "hierarchical", g, h)


def cartesian(g: Graph, h: Graph) -> ProductGraph:
    p = hierarchical(g, g.full_set(), h)
    return ProductGraph(p.graph, p.labels, "cartesian", g, h)


def lexicographic(g: Graph, h: Graph) -> ProductGraph:
    """``G[H]``: adjacent iff ``g1g2 ∈ E(G)``, or ``g1 = g2`` and ``h1h2 ∈ E(H)``."""
    _require_nonempty(g, h)
    nh = h.n
    edges = [(a * nh + x, b * nh + y) for a, b in g.edges for x in range(nh) for y in range(nh)]
    edges += [(a * nh + x, a * nh + y) for a in range(g.n) for x, y in h.edges]
    return ProductGraph(Graph(g.n * nh, edges), _pair_labels(g, h), "lexicographic", g, h)


def corona(g: Graph, h: Graph) -> ProductGraph:
    """``G ∘ H``: one copy of H per vertex of G, fully joined to that vertex."""
    _require_nonempty(g, h)
    ng, nh = g.n, h.n
    edges = list(g.edges)
    for a in range(ng):
        off = ng + a * nh
        edges += [(a, off + x) for x in range(nh)]
        edges += [(off + x, off + y) for x, y in h.edges]
    labels: list[Label] = [Base(a) for a in range(ng)]
    labels += [VCopy(a, x) for a in range(ng) for x in range(nh)]
    return ProductGraph(Graph(ng * (1 + nh), edges), tuple(labels), "corona", g, h)


def edge_corona(g: Graph, h: Graph) -> ProductGraph:
    """``G ◇ H``: one copy of H per edge uv of G, fully joined to both u and v."""
    _require_nonempty(g, h)
    ng, nh = g.n, h.n
    edges = list(g.edges)
    for i, (a, b) in enumerate(g.edges):
        off = ng + i * nh
        edges += [(a, off + x) for x in range(nh)]
        edges += [(b, off + x) for x in range(nh)]
        edges += [(off + x, off + y) for x, y in h.edges]
    labels: list[Label] = [Base(a) for a in range(ng)]
    labels += [ECopy(i, x) for i in range(g.m) for x in range(nh)]
    return ProductGraph(Graph(ng + g.m * nh, edges), tuple(labels), "edge_corona", g, h)


def build(kind: str, g: Graph, h: Graph, u: VertexSet | Iterable[int] | None = None) -> ProductGraph:
    if kind == "hierarchical":
        if u is None:
            raise ProductError("hierarchical product needs a vertex set U")
        return hierarchical(g, u, h)
    builders: dict[str, Callable[[Graph, Graph], ProductGraph]] = {
        "cartesian": cartesian,
        "lexicographic": lexicographic,
        "corona": corona,
        "edge_corona": edge_corona,
    }
    try:
        return builders[kind](g, h)
    except KeyError:
        raise ProductError(f"unknown product kind {kind!r}") from None


def lift(product: ProductGraph, spec: Iterable[Label] | Callable[[Label], bool]) -> VertexSet:
    """Product ids of a factor-level description.

    ``spec`` is either an explicit collection of labels, or a predicate that
    selects labels (e.g. ``lambda lab: isinstance(lab, Base)``).
    """
    if callable(spec):
        ids: Iterable[int] = (i for i, lab in enumerate(product.labels) if spec(lab))
    else:
        ids = [product.id_of(lab) for lab in spec]
    return VertexSet.of(ids, product.n)


def pairs(s: Iterable[int], t: Iterable[int]) -> list[Pair]:
    """Labels of ``S × T`` for the pair-labelled products."""
    t = list(t)
    return [Pair(a, b) for a in s for b in t]


def product_from_dict(data: dict[str, Any]) -> ProductGraph:
    """Rebuild a product from its JSON form (factors are not stored; they are left empty)."""
    tags = {v: k for k, v in _LABEL_TAGS.items()}
    try:
        graph = Graph(int(data["n"]), [tuple(e) for e in data["edges"]])
        labels = tuple(tags[row[0]](*row[1:]) for row in data["labels"])
        kind = data["kind"]
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"malformed product JSON: {exc}") from exc
    return ProductGraph(graph, labels, kind, Graph(0), Graph(0))

"""Isomorphism test for small graphs.

Vertices are first partitioned by iterated degree refinement (1-dimensional
Weisfeiler-Leman) computed jointly over both graphs, so colour classes are
comparable. A backtracking search then maps vertices class by class, checking
adjacency against every vertex already mapped.
"""

from __future__ import annotations

from .graph import Graph


def _refine(g: Graph, h: Graph) -> tuple[list[int], list[int]] | None:
    cg = [g.degree(v) for v in g.vertices()]
    ch = [h.degree(v) for v in h.vertices()]
    while True:
        sig_g = [(cg[v], tuple(sorted(cg[w] for w in g.neighbors(v)))) for v in g.vertices()]
        sig_h = [(ch[v], tuple(sorted(ch[w] for w in h.neighbors(v)))) for v in h.vertices()]
        if sorted(sig_g) != sorted(sig_h):
            return None
        palette = {s: i for i, s in enumerate(sorted(set(sig_g)))}
        new_g = [palette[s] for s in sig_g]
        new_h = [palette[s] for s in sig_h]
        if len(palette) == len(set(cg)):
            return new_g, new_h
        cg, ch = new_g, new_h


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """True iff some bijection of vertices preserves adjacency. Meant for n up to ~30."""
    if g.n != h.n or g.m != h.m or sorted(g.degrees) != sorted(h.degrees):
        return False
    colors = _refine(g, h)
    if colors is None:
        return False
    cg, ch = colors

    # smallest colour classes first, then follow adjacency to keep the frontier connected
    class_size: dict[int, int] = {}
    for c in cg:
        class_size[c] = class_size.get(c, 0) + 1
    order: list[int] = []
    placed: set[int] = set()
    while len(order) < g.n:
        frontier = [v for v in g.vertices() if v not in placed and any(w in placed for w in g.neighbors(v))]
        pool = frontier or [v for v in g.vertices() if v not in placed]
        v = min(pool, key=lambda x: (class_size[cg[x]], -g.degree(x), x))
        order.append(v)
        placed.add(v)

    by_color: dict[int, list[int]] = {}
    for v in h.vertices():
        by_color.setdefault(ch[v], []).append(v)

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in by_color[cg[v]]:
            if w in used:
                continue
            if all(h.has_edge(w, mapping[u]) == g.has_edge(v, u) for u in mapping):
                mapping[v] = w
                used.add(w)
                if extend(i + 1):
                    return True
                del mapping[v]
                used.discard(w)
        return False

    return extend(0)

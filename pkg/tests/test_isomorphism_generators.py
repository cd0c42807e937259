import random

import networkx as nx
import pytest

from alliances.generators import (
    FAMILIES,
    UnknownFamily,
    complete,
    cycle,
    empty,
    enumerate_graphs,
    g12,
    generate,
    path,
    sun,
    truncated_cube,
)
from alliances.graph import Graph, GraphError, disjoint_union, relabel
from alliances.isomorphism import are_isomorphic
from alliances.products import hierarchical

from oracles import random_graph


def _nx(g):
    ref = nx.Graph()
    ref.add_nodes_from(range(g.n))
    ref.add_edges_from(g.edges)
    return ref


def test_cycle_relabelled():
    assert are_isomorphic(cycle(4), relabel(cycle(4), [2, 0, 3, 1]))


def test_hexagon_vs_two_triangles():
    assert not are_isomorphic(cycle(6), disjoint_union(cycle(3), cycle(3)))


def test_g12_product_is_truncated_cube():
    g, u = g12()
    assert are_isomorphic(hierarchical(g, u, path(2)).graph, truncated_cube())


def test_against_networkx():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randint(1, 8)
        p = rng.random()
        g, h = random_graph(rng, n, p), random_graph(rng, n, p)
        assert are_isomorphic(g, h) == nx.is_isomorphic(_nx(g), _nx(h))


def test_reflexive_symmetric_relabel_invariant():
    rng = random.Random(3)
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 14))
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = relabel(g, perm)
        assert are_isomorphic(g, g)
        assert are_isomorphic(g, h) and are_isomorphic(h, g)


def test_regular_non_isomorphic():
    # both 3-regular on 8 vertices: the cube and the Wagner graph (Möbius ladder)
    cube = Graph(8, [(a, a ^ (1 << i)) for a in range(8) for i in range(3) if a < a ^ (1 << i)])
    wagner = Graph(8, [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)])
    assert not are_isomorphic(cube, wagner)


# -- generators --


def test_complete_4():
    assert complete(4).m == 6


def test_g12_structure():
    g, u = g12()
    assert (g.n, g.m) == (12, 16)
    assert sorted(u) == [8, 9, 10, 11]
    assert all(g.degree(v) == 2 for v in u)
    assert all(g.degree(v) == 3 for v in range(8))


def test_truncated_cube_structure():
    g = truncated_cube()
    assert (g.n, g.m) == (24, 36)
    assert g.min_degree == g.max_degree == 3
    assert nx.is_isomorphic(_nx(g), nx.truncated_cube_graph())


def test_sun_3():
    g = sun(3)
    assert (g.n, g.m) == (6, 9)


@pytest.mark.parametrize("n", range(3, 10))
def test_sun_sizes(n):
    # C_n ◇ K_1 has n cycle vertices plus n apexes, and n + 2n edges
    g = sun(n)
    assert g.n == 2 * n and g.m == 3 * n


@pytest.mark.parametrize("family, n", [("cycle", 2), ("path", 0), ("sun", 2), ("complete", 0)])
def test_below_minimum(family, n):
    with pytest.raises(GraphError):
        generate(family, n)


def test_unknown_family():
    with pytest.raises(UnknownFamily):
        generate("petersen")


def test_generate_all_families():
    for fam in FAMILIES:
        params = () if fam in ("truncated_cube", "g12") else (4,)
        g, _ = generate(fam, *params)
        for v in g.vertices():
            assert v not in g.neighbors(v)
    assert generate("C", 5)[0] == cycle(5)
    assert generate("E", 3)[0] == empty(3)


@pytest.mark.parametrize("n, total, connected", [(1, 1, 1), (2, 2, 1), (3, 4, 2), (4, 11, 6), (5, 34, 21)])
def test_enumerate_graph_counts(n, total, connected):
    assert len(list(enumerate_graphs(n))) == total
    assert len(list(enumerate_graphs(n, connected=True))) == connected

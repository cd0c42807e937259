"""End-to-end acceptance checks, one test per criterion.

The terminal summary (see conftest) prints a PASS/FAIL line per criterion.
"""

import itertools
import math
import random

import pytest

from alliances.alliance import domination_number, gdka_number, is_gdka
from alliances.bounds import (
    THEOREMS,
    corona_bound,
    edge_corona_bound,
    evaluate,
    hierarchical_bound,
    lex_pcode_bound,
    lex_shift_bound,
    verified,
)
from alliances.generators import complete, cycle, enumerate_graphs, g12, path, truncated_cube
from alliances.graph import Graph
from alliances.isomorphism import are_isomorphic
from alliances.products import edge_corona, hierarchical, lexicographic
from alliances.sweep import NamedGraph, SweepSpec, run_sweep
from alliances.values import INF

import oracles

K1 = Graph(1)


def test_criterion_1_truncated_cube_sharpness():
    g, u = g12()
    assert domination_number(g).value == 4
    assert gdka_number(g, -1).value == 4
    product = hierarchical(g, u, path(2))
    assert are_isomorphic(product.graph, truncated_cube())
    assert gdka_number(product.graph, -1).value == 8
    report = verified(hierarchical_bound(g, u, path(2), -1))
    assert report.bound == 8 and report.exact == 8 and report.sharp is True


def test_criterion_2_sun_graph():
    s3 = edge_corona(cycle(3), K1)
    assert (s3.n, s3.graph.m) == (6, 9)
    report = verified(edge_corona_bound(cycle(3), K1, 0))
    # γ^d_2(K_1) is infinite but multiplied by the zero edge count inside S'
    assert report.terms["gdk2_H"] == INF and report.terms["edges_outside_S_prime"] == 0
    assert report.terms["term3"] == 3 and report.bound == 3
    assert gdka_number(s3.graph, 0).value == 3
    assert report.sharp is True


@pytest.mark.parametrize("m", range(2, 9))
def test_criterion_3_complete_graph_regressions(m):
    assert gdka_number(complete(m), 1).value == math.ceil((m + 2) / 2)
    assert gdka_number(complete(m), -1).value == (m + 1) // 2


@pytest.mark.parametrize("g", [cycle(3), cycle(4)], ids=["C3", "C4"])
@pytest.mark.parametrize("m", [4, 5, 6])
def test_criterion_4_corona_sharpness(g, m):
    assert g.max_degree < m - 1
    report = verified(corona_bound(g, complete(m), 0), max_n=24)
    assert report.witness_valid
    assert report.bound == g.n * math.ceil((m + 2) / 2)
    n_product = g.n * (1 + m)
    if n_product > 24:
        assert report.exact is None
        return
    if m % 2 == 0:
        assert report.exact == g.n * math.ceil((m + 1) / 2) == report.bound
        assert report.sharp
    else:
        # gap reported, bound holds; the exact value comes from the solver
        print(f"C{g.n}∘K{m}: bound {report.bound}, exact {report.exact}, gap {report.gap}")
        assert report.gap is not None and report.gap >= 0
        assert report.bound_holds


def _sweep_graphs():
    lefts = [NamedGraph(f"G{n}.{i}", g) for n in range(1, 6) for i, g in enumerate(enumerate_graphs(n, True))]
    rights = [NamedGraph(f"H{n}.{i}", h) for n in range(1, 4) for i, h in enumerate(enumerate_graphs(n))]
    return lefts, rights


@pytest.mark.slow
def test_criterion_5_property_sweep():
    lefts, rights = _sweep_graphs()
    assert (len(lefts), len(rights)) == (31, 7)
    ks = list(range(-4, 5))
    rows = run_sweep(SweepSpec(lefts, rights, ks, max_n=40, workers=4))
    assert len(rows) >= 200
    assert all(r.exact != "skipped" for r in rows)
    bad = [r for r in rows if r.violation]
    assert not bad, bad[:5]
    assert all(r.witness_valid in ("true", "not-checked") for r in rows)
    assert all(r.witness_valid == "true" for r in rows if r.bound != "inf")

    # every finite witness is a GDk-A at the theorem's own (possibly shifted) k
    rng = random.Random(0)
    for theorem in THEOREMS:
        for _ in range(40):
            g, h, k = rng.choice(lefts), rng.choice(rights), rng.choice(ks)
            report = evaluate(theorem, g.graph, h.graph, k, u=g.u_set())
            if report.applicable and report.witness is not None:
                assert is_gdka(report.product.graph, report.witness, report.target_k)

    # monotone in k, above γ, and identical witnesses under 4-way parallel search
    for g, h in itertools.product(lefts, rights):
        for kind in ("cartesian", "lexicographic", "corona", "edge_corona"):
            p = evaluate({"cartesian": "cartesian_min", "lexicographic": "lex_shift",
                          "corona": "corona", "edge_corona": "edge_corona"}[kind], g.graph, h.graph, 0).product
            if p.n > 24:
                continue
            gamma = domination_number(p.graph).value
            values = [gdka_number(p.graph, k).value for k in ks]
            assert values == sorted(values)
            assert all(gamma <= v for v in values)
    for g in lefts[-6:]:
        for h in rights[-3:]:
            p = lexicographic(g.graph, h.graph).graph
            for k in (-1, 0, 1):
                assert gdka_number(p, k, workers=4).witness == gdka_number(p, k).witness

    # solver agrees with plain brute force on small products
    for g in lefts[:8]:
        for h in rights[:4]:
            p = lexicographic(g.graph, h.graph).graph
            if p.n <= 10:
                for k in (-2, 0, 2):
                    expect = oracles.gdk(p, k)[0]
                    assert gdka_number(p, k).value == (INF if expect is None else expect)


def test_criterion_6_lexicographic_shift():
    report = verified(lex_shift_bound(cycle(4), complete(2), 0))
    assert report.target_k == 1 and report.bound == 4
    assert report.witness_valid
    product = lexicographic(cycle(4), complete(2)).graph
    assert oracles.gdk(product, 1)[0] <= 4
    s_g = gdka_number(cycle(4), 0).witness
    assert report.witness.sorted() == sorted(a * 2 + x for a in s_g for x in range(2))


def test_criterion_7_perfect_code_bound():
    na = lex_pcode_bound(cycle(4), path(3), 2)
    assert not na.applicable and na.reason == "no 1-perfect code"
    report = verified(lex_pcode_bound(complete(4), path(2), 2))
    assert report.witness_valid
    assert report.bound == 5

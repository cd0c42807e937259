import itertools
import math
import random

import pytest

from alliances.alliance import (
    EmptySetError,
    SolverCapError,
    dka_number,
    domination_number,
    find_1_perfect_code,
    gdka_number,
    is_1_perfect_code,
    is_defensive_k_alliance,
    is_dominating,
    is_gdka,
    minimum_gdkas,
    required_inside,
)
from alliances.generators import complete, cycle, empty, g12, path, sun, truncated_cube
from alliances.graph import Graph
from alliances.values import INF

import oracles
from oracles import random_graph


def _random_graphs(seed, count, max_n=8):
    rng = random.Random(seed)
    return [random_graph(rng, rng.randint(1, max_n)) for _ in range(count)]


# -- predicates --


def test_dominating_examples():
    assert is_dominating(complete(4), [0])
    assert not is_dominating(cycle(4), [0])
    assert is_dominating(cycle(4), range(4))
    assert not is_dominating(cycle(4), [])
    assert is_dominating(Graph(0), [])


def test_g12_dominated_by_cycle_evens():
    g, _ = g12()
    # {0,2,4,6} reaches every cycle vertex but each apex 8+i sits on {2i, 2i+1}
    assert is_dominating(g, [0, 2, 4, 6])


def test_defensive_examples():
    assert is_defensive_k_alliance(cycle(4), range(4), 2)
    assert not is_defensive_k_alliance(complete(4), [0, 1], 0)
    with pytest.raises(EmptySetError):
        is_defensive_k_alliance(cycle(4), [], 0)
    with pytest.raises(EmptySetError):
        is_gdka(cycle(4), [], 0)


def test_g12_alliance():
    # the four cycle vertices 4..7 of the order-12 factor: each has its cycle partner inside
    g, _ = g12()
    s = [4, 5, 6, 7]
    assert is_defensive_k_alliance(g, s, -1)


def test_gdka_examples():
    assert is_gdka(complete(4), range(4), 3)
    assert is_gdka(cycle(4), [0, 1], 0)
    assert is_gdka(sun(3), [0, 1, 2], 0)


def test_required_inside():
    assert required_inside(3, -1) == 1
    assert required_inside(3, 2) == 3
    assert required_inside(1, -5) == 0


@pytest.mark.parametrize("seed", range(4))
def test_predicates_match_oracle(seed):
    rng = random.Random(seed)
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 7))
        s = {v for v in range(g.n) if rng.random() < 0.5} or {0}
        k = rng.randint(-3, 3)
        assert is_dominating(g, s) == oracles.dominates(g, s)
        assert is_defensive_k_alliance(g, s, k) == oracles.defensive(g, s, k)


# -- solvers: worked examples --


def test_domination_examples():
    assert domination_number(complete(5)).value == 1
    g, _ = g12()
    assert domination_number(g).value == 4
    assert domination_number(cycle(6)).value == oracles.gamma(cycle(6)) == 2


def test_gdka_examples():
    assert gdka_number(truncated_cube(), -1).value == 8
    assert gdka_number(Graph(1), 2).value == INF
    assert gdka_number(Graph(1), 2).witness is None
    assert gdka_number(cycle(3), 0).value == 2


@pytest.mark.parametrize("m", range(2, 9))
def test_complete_graph_regressions(m):
    assert gdka_number(complete(m), 1).value == math.ceil((m + 2) / 2)
    assert gdka_number(complete(m), -1).value == (m + 1) // 2


def test_dka_examples():
    g = cycle(5)
    assert dka_number(g, -g.max_degree - 1).value == 1
    # every member of a defensive 1-alliance in C_5 needs both neighbours inside
    assert oracles.dk(g, 1)[0] == 5
    assert dka_number(g, 1).value == 5


# -- solvers vs the brute-force oracle --


@pytest.mark.parametrize("seed", range(3))
def test_gdka_matches_oracle(seed):
    for g in _random_graphs(seed, 40):
        for k in range(-3, 4):
            res = gdka_number(g, k)
            size, witness = oracles.gdk(g, k)
            if size is None:
                assert res.value == INF and res.witness is None
            else:
                assert res.value == size
                assert res.witness.sorted() == witness  # lexicographically smallest


@pytest.mark.parametrize("seed", range(3))
def test_dka_and_gamma_match_oracle(seed):
    for g in _random_graphs(100 + seed, 40):
        assert domination_number(g).value == oracles.gamma(g)
        for k in range(-3, 4):
            size, witness = oracles.dk(g, k)
            res = dka_number(g, k)
            assert res.value == (INF if size is None else size)
            if size is not None:
                assert res.witness.sorted() == witness


def test_witness_minimal_exhaustive():
    for g in _random_graphs(7, 30):
        for k in range(-2, 3):
            res = gdka_number(g, k)
            if res.value == INF:
                continue
            c = int(res.value)
            assert len(res.witness) == c and is_gdka(g, res.witness, k)
            for combo in itertools.combinations(range(g.n), c - 1):
                assert not combo or not is_gdka(g, combo, k)


def test_monotone_in_k_and_above_gamma():
    for g in _random_graphs(8, 40):
        gamma = domination_number(g).value
        values = [gdka_number(g, k).value for k in range(-4, 5)]
        assert values == sorted(values)
        for k in range(-4, 5):
            gd = gdka_number(g, k).value
            assert gamma <= gd
            assert dka_number(g, k).value <= gd


def test_whole_vertex_set_iff_k_at_most_min_degree():
    for g in _random_graphs(9, 40):
        for k in range(-4, 5):
            assert is_gdka(g, range(g.n), k) == (k <= g.min_degree)
            if k <= g.min_degree:
                assert gdka_number(g, k).value != INF


def test_minimum_gdkas_enumerates_all():
    g = cycle(6)
    sets = [s.sorted() for s in minimum_gdkas(g, 0)]
    size = int(gdka_number(g, 0).value)
    expected = [list(c) for c in itertools.combinations(range(6), size) if oracles.dominates(g, set(c))
                and oracles.defensive(g, set(c), 0)]
    assert sets == expected
    assert list(minimum_gdkas(Graph(1), 2)) == []


def test_deterministic_and_parallel():
    g = truncated_cube()
    first = gdka_number(g, -1)
    assert gdka_number(g, -1).witness == first.witness
    assert gdka_number(g, -1, workers=4).witness == first.witness
    for g in _random_graphs(12, 6, max_n=10):
        for k in (-1, 0, 1):
            assert gdka_number(g, k, workers=4).witness == gdka_number(g, k).witness
            assert dka_number(g, k, workers=4).witness == dka_number(g, k).witness


def test_solver_cap():
    with pytest.raises(SolverCapError):
        gdka_number(empty(65), 0)
    with pytest.raises(ValueError):
        gdka_number(Graph(0), 0)


# -- 1-perfect codes --


def test_perfect_code_examples():
    assert find_1_perfect_code(complete(3)).sorted() == [0]
    assert find_1_perfect_code(cycle(4)) is None
    assert find_1_perfect_code(cycle(6)).sorted() == [0, 3]


def test_perfect_code_properties():
    for g in _random_graphs(13, 150):
        d = find_1_perfect_code(g)
        assert (d is not None) == oracles.has_perfect_code(g)
        if d is not None:
            balls = [g.neighbors(v) | {v} for v in d]
            assert sum(map(len, balls)) == g.n
            assert set().union(*balls) == set(range(g.n))
            assert is_1_perfect_code(g, d)
            assert len(d) == oracles.gamma(g)


def test_is_perfect_code():
    assert is_1_perfect_code(path(3), [1])
    assert not is_1_perfect_code(path(4), [0, 1])

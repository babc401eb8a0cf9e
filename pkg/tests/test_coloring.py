import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from idealis import (
    Hypergraph,
    LoopError,
    chromatic_number,
    critical_subsets,
    edge_ideal,
    find_coloring,
    is_critically_chromatic,
    is_k_colorable,
    secant_power,
)
from idealis.coloring import METHODS, colorable_table
from idealis.graphs import complete, cycle, edgeless, five_cycle_with_apex
from idealis.hypergraph import expansion, induced


def test_running_example_colorability(G):
    for method in METHODS:
        assert not is_k_colorable(G, 2, method)
        assert is_k_colorable(G, 3, method)
        assert chromatic_number(G, method) == 3


def test_small_examples():
    for method in METHODS:
        assert is_k_colorable(edgeless(3), 1, method)
        assert not is_k_colorable(cycle(5), 2, method)
        assert chromatic_number(complete(4), method) == 4
        assert chromatic_number(five_cycle_with_apex(), method) == 3


def test_witness_is_least_and_proper(G):
    w = find_coloring(G, 3)
    assert w == {"a": 1, "b": 2, "c": 1, "d": 2, "e": 3, "f": 1, "g": 3}
    assert all(len({w[v] for v in e}) > 1 for e in G.edges)
    assert find_coloring(G, 2) is None


def test_loops_rejected():
    H = Hypergraph("ab", [["a"]])
    for method in METHODS:
        with pytest.raises(LoopError, match="at least two vertices"):
            is_k_colorable(H, 2, method)


def test_secant_powers_of_running_example(G):
    assert secant_power(G, 1) == edge_ideal(G)
    assert str(secant_power(G, 2)) == "(a*b*c*d*e)"
    assert secant_power(G, 3).is_zero


def test_critical_subsets(G):
    assert critical_subsets(G, 3) == [tuple("abcde")]
    C6 = cycle(6)
    assert critical_subsets(C6, 2) == list(C6.edges)


def test_critical_subset_of_expansion():
    H = five_cycle_with_apex()
    E = expansion(H, 3).graph
    T = ["x1.1", "x2.1", "x2.2", "x3.1", "x4.1", "x5.1", "x6.1"]
    assert is_critically_chromatic(induced(E, T), 4)
    assert not is_critically_chromatic(H, 4)


def test_table_handles_large_counts():
    # 2^n * i^k crosses int64 here, exercising the exact fallback
    H = edgeless(12)
    assert colorable_table(H, 7).all()


# -- properties -------------------------------------------------------------


def test_three_routes_agree_on_all_small_graphs():
    for H in oracles.atlas_graphs(6):
        chi = oracles.chromatic(H.n, oracles.index_edges(H))
        assert [chromatic_number(H, m) for m in METHODS] == [chi] * 3


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 6), st.randoms(use_true_random=False))
def test_three_routes_agree_on_uniform_hypergraphs(n, rnd):
    H = oracles.random_uniform_hypergraph(n, 3, rnd)
    chi = oracles.chromatic(n, oracles.index_edges(H))
    for k in range(1, chi + 2):
        verdicts = {is_k_colorable(H, k, m) for m in METHODS}
        assert verdicts == {k >= chi}


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 6), st.randoms(use_true_random=False))
def test_secant_membership_is_support_monotone(n, rnd):
    H = oracles.random_graph(n, rnd, p=0.6)
    for k in (1, 2):
        S = secant_power(H, k)
        for g in S.gens:
            for v in H.vertices.names:
                assert (g * H.vertices.var(v)) in S
                assert H.vertices.squarefree(set(g.support) | {v}) in S


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6), st.randoms(use_true_random=False))
def test_chromatic_number_monotone_under_induced(n, rnd):
    H = oracles.random_graph(n, rnd)
    chi = chromatic_number(H)
    for r in range(n + 1):
        W = rnd.sample(H.vertices.names, r)
        assert chromatic_number(induced(H, W)) <= chi
    for k in range(1, n + 1):
        for m in METHODS:
            if is_k_colorable(H, k, m):
                assert is_k_colorable(H, k + 1, m)


def test_secant_square_generators_are_odd_induced_cycles():
    rng = random.Random(11)
    graphs = list(oracles.atlas_graphs(6)) + [oracles.random_graph(n, rng) for n in (7, 8) for _ in range(15)]
    for H in graphs:
        got = {frozenset(H.vertices.index(v) for v in g.support) for g in secant_power(H, 2).gens}
        assert got == oracles.chordless_odd_cycles(H.n, oracles.index_edges(H))

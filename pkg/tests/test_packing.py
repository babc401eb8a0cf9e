import itertools
import json
import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from idealis import (
    DomainError,
    Hypergraph,
    cc_scan,
    decompose_cover,
    dual_hypergraph,
    edge_ideal,
    is_k_cover,
    konig_data,
    mfmc_bounded,
    ntf_bounded,
    packing_property,
    packs,
    sigma_gamma,
)
from idealis.graphs import cycle, path
from idealis.hypergraph import cover_ideal
from idealis.packing import INF, enumerate_hypergraphs, incidence_matrix
from idealis.symbolic import is_bipartite


def test_incidence_matrix():
    A = incidence_matrix(cycle(4))
    assert A.shape == (4, 4)
    assert (A.sum(axis=0) == 2).all()


def test_sigma_gamma_examples():
    assert sigma_gamma(cycle(5), [1] * 5) == (2, 3)
    assert sigma_gamma(cycle(4), [1] * 4) == (2, 2)
    assert sigma_gamma(cycle(5), [0] * 5) == (0, 0)
    with pytest.raises(DomainError):
        sigma_gamma(cycle(4), [1, 1, INF, 1])


def test_k_cover_examples():
    C5 = cycle(5)
    assert is_k_cover(C5, [1] * 5, 2)
    w = [1, 0, 1, 0, 1]
    assert is_k_cover(C5, w, 1) and not is_k_cover(C5, w, 2)


def test_decompose_cover_examples():
    C5 = cycle(5)
    covers = decompose_cover(C5, [2, 1, 1, 1, 1], 2)
    assert len(covers) == 2
    assert all(is_k_cover(C5, w, 1) for w in covers)
    assert set(covers) == {(1, 0, 1, 0, 1), (1, 1, 0, 1, 0)}
    assert decompose_cover(C5, [1] * 5, 2) is None
    assert decompose_cover(C5, [2, 0, 1, 0, 3], 1) == [(1, 0, 1, 0, 1)]


def test_packing_examples():
    assert not packs(cycle(5))
    r = packing_property(cycle(3))
    assert not r.holds and (r.alpha0, r.beta1) == (2, 1)
    assert packing_property(cycle(6)).holds
    assert packing_property(path(4)).holds
    bad = packing_property(cycle(5))
    assert not bad.holds and bad.alpha0 > bad.beta1


def test_mfmc_examples():
    v = mfmc_bounded(cycle(3), 3)
    assert (v.holds, v.q, str(v.witness)) == (False, 2, "x1*x2*x3")
    assert str(v) == "fails-at-q=2 witness x1*x2*x3"
    ok = mfmc_bounded(edge_ideal(cycle(4)), 3)
    assert ok.holds and str(ok) == "holds-up-to-bound q<=3"
    assert mfmc_bounded(cycle(5), 3).q == 3
    with pytest.raises(DomainError):
        mfmc_bounded(cycle(4), 1)


def test_ntf_examples():
    v = ntf_bounded(edge_ideal(cycle(3)), 3)
    assert not v.holds and v.q == 2
    assert [p.support for p in v.new_primes] == [("x1", "x2", "x3")]
    assert ntf_bounded(edge_ideal(cycle(6)), 3, cross_check=True).holds
    assert ntf_bounded(cover_ideal(cycle(5)), 3).q == 2


# -- properties -------------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 6), st.randoms(use_true_random=False))
def test_sigma_gamma_match_milp(n, rnd):
    H = oracles.random_antichain(n, rnd, max_edge=3, max_edges=6)
    if not H.masks:
        return
    c = [rnd.randint(0, 3) for _ in range(n)]
    got = sigma_gamma(H, c)
    assert got == oracles.sigma_gamma_milp(n, oracles.index_edges(H), c)
    assert got[0] <= got[1]


def _small_hypergraphs(rng, count=60):
    for _ in range(count):
        n = rng.randint(2, 5)
        H = oracles.random_antichain(n, rng, max_edge=3, max_edges=5)
        if H.masks:
            yield H


def test_k_cover_of_dual_matches_gamma():
    rng = random.Random(3)
    for H in _small_hypergraphs(rng):
        D = dual_hypergraph(H)
        for c in itertools.product(range(3), repeat=H.n):
            gamma = sigma_gamma(H, c)[1]
            for k in range(gamma + 2):
                assert is_k_cover(D, c, k) == (k <= gamma)


def test_decompose_cover_matches_packing_of_dual():
    rng = random.Random(4)
    for H in _small_hypergraphs(rng, 40):
        D = dual_hypergraph(H)
        for c in itertools.product(range(3), repeat=H.n):
            sigma = sigma_gamma(D, c)[0]
            for k in range(sigma + 2):
                res = decompose_cover(H, c, k)
                assert (res is not None) == (k <= sigma)
                if res:
                    assert all(is_k_cover(H, w, 1) for w in res)
                    assert all(sum(w[i] for w in res) <= c[i] for i in range(H.n))


def test_k_cover_additivity():
    rng = random.Random(8)
    for H in _small_hypergraphs(rng, 30):
        for _ in range(10):
            a = [rng.randint(0, 2) for _ in range(H.n)]
            b = [rng.randint(0, 2) for _ in range(H.n)]
            k = min(sum(a[i] for i in oracles.index_edges(H)[j]) for j in range(len(H.masks)))
            l = min(sum(b[i] for i in oracles.index_edges(H)[j]) for j in range(len(H.masks)))
            assert is_k_cover(H, [x + y for x, y in zip(a, b)], k + l)


def test_packs_three_way():
    for H in oracles.atlas_graphs(6):
        if not H.masks:
            continue
        s, g = sigma_gamma(H, [1] * H.n)
        assert packs(H) == (s == g) == konig_data(H).is_konig


def test_mfmc_and_ntf_agree():
    rng = random.Random(6)
    graphs = [H for H in oracles.atlas_graphs(5) if H.masks] + list(_small_hypergraphs(rng, 30))
    for H in graphs:
        I = edge_ideal(H)
        m = mfmc_bounded(I, 3)
        v = ntf_bounded(I, 3, cross_check=True)
        assert (m.holds, m.q) == (v.holds, v.q)


def test_bipartite_graphs_pack_and_hold():
    for H in oracles.atlas_graphs(6):
        if H.masks and is_bipartite(H, "oracle"):
            assert packing_property(H).holds
            assert mfmc_bounded(H, 3).holds


def test_enumeration_counts():
    # labeled simple graphs on n vertices: 2^(n choose 2)
    for n in range(1, 5):
        assert sum(1 for _ in enumerate_hypergraphs(n, 2, graphs_only=True)) == 2 ** (n * (n - 1) // 2)
    # antichains of subsets of a 2-set, empty set excluded: {}, {1}, {2}, {1,2}, {12}
    assert sum(1 for _ in enumerate_hypergraphs(2, 2)) == 5


def test_cc_scan_small(tmp_path):
    rep = cc_scan(n_max=5, q_max=3, graphs_only=True)
    assert rep.candidates == []
    forms = {r["canonical_form"]: r for r in rep.records}
    c5 = cycle(5).canonical_form()
    assert not forms[c5]["packing"] and forms[c5]["mfmc_verdict"] == "skipped"
    c4 = Hypergraph(["x1", "x2", "x3", "x4"], [["x1", "x2"], ["x2", "x3"], ["x3", "x4"], ["x1", "x4"]])
    assert forms[c4.canonical_form()]["mfmc_verdict"] == "holds-up-to-bound"


def test_cc_scan_resume_and_jobs(tmp_path):
    state = tmp_path / "scan.jsonl"
    first = cc_scan(n_max=3, q_max=3, resume=str(state))
    lines = state.read_text().splitlines()
    assert len(lines) == len(first.records)
    assert all({"canonical_form", "packing", "mfmc_verdict"} <= set(json.loads(x)) for x in lines)
    again = cc_scan(n_max=4, q_max=3, resume=str(state))
    assert len(state.read_text().splitlines()) == len(again.records)
    par = cc_scan(n_max=4, q_max=3, jobs=2)
    assert par.records == again.records

import itertools

import pytest
from hypothesis import given, settings

import oracles
from conftest import exps_lists, ring
from idealis import (
    DomainError,
    MonomialIdeal,
    SquarefreeError,
    VariableSet,
    associated_primes,
    generalized_dual,
    intersect_components,
    irreducible_decomposition,
    power,
    squarefree_dual,
)
from idealis.duality import components_from_json, components_to_json
from idealis.graphs import cycle, five_cycle_with_apex
from idealis.hypergraph import cover_ideal, edge_ideal

X = VariableSet(("x1", "x2"))


def _prime_sets(primes):
    return {frozenset(p.support) for p in primes}


def test_dual_of_running_example(G):
    assert str(squarefree_dual(edge_ideal(G))) == "(a*b*d*f, a*c*d*f, a*c*e*g, b*c*e*g, b*d*e*f, b*d*e*g)"


def test_dual_small_cases():
    assert str(squarefree_dual(X.ideal("(x1*x2)"))) == "(x1, x2)"
    C5 = cycle(5)
    gens = {frozenset(g.support) for g in squarefree_dual(edge_ideal(C5)).gens}
    names = C5.vertices.names
    assert gens == {frozenset(names[(i + 2 * j) % 5] for j in range(3)) for i in range(5)}


def test_dual_rejects_non_squarefree():
    with pytest.raises(SquarefreeError, match="x1\\^2"):
        squarefree_dual(X.ideal("(x1^2, x2)"))


def test_generalized_dual_examples(G):
    I = X.ideal("(x1^2, x1*x2)")
    assert str(generalized_dual(I, (2, 2))) == "(x1^2, x1*x2^2)"
    assert generalized_dual(generalized_dual(I, (2, 2)), (2, 2)) == I
    E = edge_ideal(G)
    assert generalized_dual(E, [1] * 7) == squarefree_dual(E)
    with pytest.raises(ValueError):
        generalized_dual(I, (1, 1))


def test_decomposition_examples():
    comps = irreducible_decomposition(X.ideal("(x1^2, x1*x2)"))
    assert [str(q) for q in comps] == ["(x1)", "(x1^2, x2)"]
    assert {frozenset(p.support) for p in associated_primes(X.ideal("(x1^2, x1*x2)"))} == {
        frozenset({"x1"}), frozenset({"x1", "x2"})}


def _primary_parts(comps, ring):
    """Group irreducible components by radical and intersect each group."""
    groups = {}
    for q in comps:
        groups.setdefault(frozenset(q.support), []).append(q)
    return {W: intersect_components(qs, ring) for W, qs in groups.items()}


def test_decomposition_of_odd_cycle_cover_square():
    C5 = cycle(5)
    S = C5.vertices
    parts = _primary_parts(irreducible_decomposition(power(cover_ideal(C5), 2)), S)
    n = S.names
    expected = {frozenset(n): S.ideal([{v: 2} for v in n])}
    for i in range(5):
        e = (n[i], n[(i + 1) % 5])
        expected[frozenset(e)] = power(S.ideal(list(e)), 2)
    assert parts == expected


def test_decomposition_of_squarefree_is_min_covers(G):
    comps = irreducible_decomposition(edge_ideal(G))
    covers = oracles.min_covers(7, oracles.index_edges(G))
    names = G.vertices.names
    assert {frozenset(q.support) for q in comps} == {frozenset(names[i] for i in W) for W in covers}
    assert all(set(q.bounds) <= {1, None} for q in comps)


def test_running_example_ass_of_cover_square(G):
    primes = _prime_sets(associated_primes(power(cover_ideal(G), 2)))
    assert primes == {frozenset(e) for e in G.edges} | {frozenset("abcde")}


def test_new_prime_enters_at_third_power():
    H = five_cycle_with_apex()
    J = cover_ideal(H)
    full = frozenset(H.vertices.names)
    assert full not in _prime_sets(associated_primes(J))
    assert full not in _prime_sets(associated_primes(power(J, 2)))
    assert full in _prime_sets(associated_primes(power(J, 3)))


def test_decomposition_domain_errors():
    with pytest.raises(DomainError):
        irreducible_decomposition(MonomialIdeal.zero(X))
    with pytest.raises(DomainError):
        irreducible_decomposition(MonomialIdeal.unit(X))


def test_json_round_trip():
    I = X.ideal("(x1^2, x1*x2)")
    comps = irreducible_decomposition(I)
    data = components_to_json(comps)
    assert data == [{"bounds": {"x1": 1}}, {"bounds": {"x1": 2, "x2": 1}}]
    assert components_from_json(data, X) == comps


# -- properties -------------------------------------------------------------


def test_squarefree_dual_involution_exhaustive():
    for n in range(1, 5):
        S = ring(n)
        subsets = [m for m in itertools.product((0, 1), repeat=n) if any(m)]
        for r in range(1, 4):
            for gens in itertools.combinations(subsets, r):
                I = MonomialIdeal(S, gens)
                assert squarefree_dual(squarefree_dual(I)) == I


def _nontrivial(n, gens):
    I = MonomialIdeal(ring(n), gens)
    return None if I.is_zero or I.is_unit else I


@settings(deadline=None)
@given(exps_lists(top=3))
def test_generalized_dual_involution(data):
    n, gens = data
    I = _nontrivial(n, gens)
    if I is None:
        return
    a = [max(1, x) for x in I.lcm_exps()]
    assert generalized_dual(generalized_dual(I, a), a) == I


@settings(deadline=None)
@given(exps_lists(top=3))
def test_decomposition_intersects_back_and_is_irredundant(data):
    n, gens = data
    I = _nontrivial(n, gens)
    if I is None:
        return
    comps = irreducible_decomposition(I)
    assert intersect_components(comps, I.ring) == I
    for m in oracles.box([4] * n):
        mm = I.ring.monomial(m)
        assert (mm in I) == all(mm in q.as_ideal() for q in comps)
    for i in range(len(comps)):
        rest = comps[:i] + comps[i + 1 :]
        if rest:
            assert intersect_components(rest, I.ring) != I


@settings(deadline=None)
@given(exps_lists(top=1))
def test_squarefree_ass_are_min_covers(data):
    n, gens = data
    I = _nontrivial(n, gens)
    if I is None:
        return
    edges = [tuple(i for i, x in enumerate(e) if x) for e in I.exps]
    covers = oracles.min_covers(n, edges)
    assert {frozenset(p.indices) for p in associated_primes(I)} == covers

"""Symbolic powers and the associated primes of powers of cover ideals.

Odd induced cycles, bipartiteness and perfection of graphs are all read off
from associated primes here, with a combinatorial route next to each
algebraic one so the two can be compared.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .coloring import chromatic_number, minimal_noncolorable
from .duality import (
    IrreducibleComponent,
    MonomialPrime,
    associated_primes,
    squarefree_dual,
)
from .errors import DomainError, ResourceLimitError, SquarefreeError
from .hypergraph import (
    Hypergraph,
    _bits,
    _names,
    _popcount,
    complement,
    cover_ideal,
    expansion,
    induced,
)
from .monomials import MonomialIdeal, _as_exps, _contains_exps, _minimal, contains, power

__all__ = [
    "MAX_SYMBOLIC_GENERATORS",
    "MAX_PROFILE_POWER",
    "MAX_EXPANSION_VERTICES",
    "minimal_primes",
    "symbolic_power",
    "symbolic_membership",
    "symbolic_gap_witness",
    "first_symbolic_gap",
    "odd_induced_cycles",
    "chordless_odd_cycles",
    "cover_square_decomposition",
    "is_bipartite",
    "cliques",
    "is_perfect",
    "imperfection_certificate",
    "AssProfile",
    "ass_profile",
    "has_saturated_chains",
    "expansion_ass_primes",
]

MAX_SYMBOLIC_GENERATORS = 200_000
MAX_PROFILE_POWER = 8
MAX_EXPANSION_VERTICES = 22

PERFECT_METHODS = ("spgt_algebraic", "clique_ass", "oracle")


def _require_squarefree_proper(I: MonomialIdeal) -> None:
    if not I.is_squarefree:
        raise SquarefreeError("symbolic powers are only defined here for squarefree ideals")
    if I.is_zero or I.is_unit:
        raise DomainError("symbolic powers need a nonzero, non-unit ideal")


def minimal_primes(I: MonomialIdeal) -> list:
    """Minimal primes of a squarefree ideal: the supports of its dual's generators."""
    _require_squarefree_proper(I)
    return sorted(MonomialPrime(I.ring, g.support) for g in squarefree_dual(I).gens)


def _meet_prime_power(gens, pvars, s, limit):
    """Minimal generators of ``(gens) & p^s`` for ``p = (x_i : i in pvars)``."""
    out = []
    for d in gens:
        deficit = s - sum(d[i] for i in pvars)
        if deficit <= 0:
            out.append(d)
            continue
        # the minimal lcms add exactly ``deficit`` to the p-degree
        for combo in itertools.combinations_with_replacement(pvars, deficit):
            nd = list(d)
            for i in combo:
                nd[i] += 1
            out.append(tuple(nd))
        if len(out) > limit:
            raise ResourceLimitError(
                f"symbolic power has more than {limit} intermediate generators",
                bound="MAX_SYMBOLIC_GENERATORS",
                flag="--max-generators",
            )
    return _minimal(out)


def symbolic_power(I: MonomialIdeal, s: int, limit: int = MAX_SYMBOLIC_GENERATORS) -> MonomialIdeal:
    """``I^(s)``: the intersection of ``p^s`` over the minimal primes ``p`` of ``I``."""
    _require_squarefree_proper(I)
    if s < 1:
        raise DomainError("symbolic power exponent must be positive")
    cur = ((0,) * len(I.ring),)
    for p in minimal_primes(I):
        cur = _meet_prime_power(cur, p.indices, s, limit)
    return MonomialIdeal._from_minimal(I.ring, cur)


def symbolic_membership(I: MonomialIdeal, s: int, m) -> bool:
    """``m in I^(s)``: ``m`` has degree at least ``s`` in every minimal prime."""
    _require_squarefree_proper(I)
    e = _as_exps(I, m)
    return all(sum(e[i] for i in p.indices) >= s for p in minimal_primes(I))


def symbolic_gap_witness(I: MonomialIdeal, q: int):
    """First generator of ``I^(q)`` (canonical order) not in ``I^q``, or None."""
    sym = symbolic_power(I, q)
    ordinary = power(I, q).exps
    for e in sym.exps:
        if not _contains_exps(ordinary, e):
            return sym.gens[sym.exps.index(e)]
    return None


def first_symbolic_gap(I: MonomialIdeal, q_max: int):
    """Least ``q <= q_max`` with ``I^(q) != I^q``, or None."""
    _require_squarefree_proper(I)
    if q_max < 1:
        raise DomainError("q_max must be positive")
    for q in range(1, q_max + 1):
        if symbolic_gap_witness(I, q) is not None:
            return q
    return None


# -- graphs: odd cycles, bipartite, perfect --------------------------------


def _require_graph(G: Hypergraph) -> None:
    if not G.is_graph:
        raise DomainError("this operation is defined for loopless graphs (all edges of size 2)")


def _prime_names(p: MonomialPrime) -> tuple:
    return tuple(p.support)


def odd_induced_cycles(G: Hypergraph) -> list:
    """Vertex sets of induced odd cycles, read from ``Ass(S/J(G)^2)``."""
    _require_graph(G)
    if not G.masks:
        return []
    edges = set(G.edges)
    J2 = power(cover_ideal(G), 2)
    return [_prime_names(p) for p in associated_primes(J2) if _prime_names(p) not in edges]


def chordless_odd_cycles(G: Hypergraph) -> list:
    """Direct enumeration of vertex sets inducing an odd cycle."""
    _require_graph(G)
    n = G.n
    adj = [0] * n
    for e in G.masks:
        a, b = _bits(e)
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    found = []
    for W in range(1 << n):
        size = _popcount(W)
        if size < 3 or size % 2 == 0:
            continue
        if any(_popcount(adj[v] & W) != 2 for v in _bits(W)):
            continue
        # 2-regular: a single cycle iff connected
        start = W & -W
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v] & W
            frontier = nxt & ~seen
            seen |= nxt
        if seen == W:
            found.append(W)
    prime = [MonomialPrime(G.vertices, _names(G.vertices, W)) for W in found]
    return [_prime_names(p) for p in sorted(prime)]


def cover_square_decomposition(G: Hypergraph) -> list:
    """Irreducible components of ``J(G)^2`` predicted by the odd-cycle formula.

    Each edge ``{x, y}`` contributes ``(x, y)^2 = (x^2, y) & (x, y^2)`` and each
    induced odd cycle ``W`` contributes ``(x^2 : x in W)``.  The odd cycles
    come from :func:`chordless_odd_cycles`, not from associated primes.
    """
    _require_graph(G)
    ring = G.vertices
    comps = []
    for x, y in G.edges:
        comps.append(IrreducibleComponent.from_map(ring, {x: 2, y: 1}))
        comps.append(IrreducibleComponent.from_map(ring, {x: 1, y: 2}))
    for W in chordless_odd_cycles(G):
        comps.append(IrreducibleComponent.from_map(ring, {v: 2 for v in W}))
    return sorted(set(comps))


def is_bipartite(G: Hypergraph, method: str = "algebraic") -> bool:
    _require_graph(G)
    if method == "algebraic":
        if not G.masks:
            return True
        return contains(power(cover_ideal(G), 2), [1] * G.n)
    if method == "oracle":
        n = G.n
        adj = [[] for _ in range(n)]
        for e in G.masks:
            a, b = _bits(e)
            adj[a].append(b)
            adj[b].append(a)
        side = [None] * n
        for r in range(n):
            if side[r] is not None:
                continue
            side[r] = 0
            stack = [r]
            while stack:
                v = stack.pop()
                for u in adj[v]:
                    if side[u] is None:
                        side[u] = 1 - side[v]
                        stack.append(u)
                    elif side[u] == side[v]:
                        return False
        return True
    raise DomainError(f"unknown bipartite method {method!r}; choose 'algebraic' or 'oracle'")


def cliques(G: Hypergraph, min_size: int = 1, max_size: int | None = None) -> list:
    """Vertex sets of complete subgraphs, as bitmasks."""
    _require_graph(G)
    n = G.n
    adj = [0] * n
    for e in G.masks:
        a, b = _bits(e)
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    out = []

    def grow(clique: int, size: int, cand: int):
        if size >= min_size:
            out.append(clique)
        if max_size is not None and size >= max_size:
            return
        for v in _bits(cand):
            bit = 1 << v
            # only extend upward to enumerate each clique once
            grow(clique | bit, size + 1, cand & adj[v] & ~((bit << 1) - 1))

    grow(0, 0, (1 << n) - 1)
    return [c for c in out if c]


def _ass_or_empty(J: MonomialIdeal, s: int) -> list:
    if J.is_unit:
        return []
    return associated_primes(power(J, s))


def _perfect_oracle(G: Hypergraph) -> bool:
    for W in range(1, 1 << G.n):
        H = induced(G, _names(G.vertices, W))
        omega = max(_popcount(c) for c in cliques(H))
        if chromatic_number(H) != omega:
            return False
    return True


def _clique_ass_condition(G: Hypergraph) -> bool:
    J = cover_ideal(G)
    chi = chromatic_number(G)
    for s in range(1, chi):
        want = {
            MonomialPrime(G.vertices, _names(G.vertices, c))
            for c in cliques(G, min_size=2, max_size=s + 1)
        }
        if set(_ass_or_empty(J, s)) != want:
            return False
    return True


def is_perfect(G: Hypergraph, method: str = "spgt_algebraic") -> bool:
    """Decide perfection.

    ``spgt_algebraic``
        No associated prime of ``S/J(G)^2`` or ``S/J(G^c)^2`` has height above 3.
    ``clique_ass``
        For ``1 <= s < chi(G)`` the primes of ``S/J^s`` are exactly the cliques
        of size 2 to ``s + 1``.
    ``oracle``
        Chromatic number equals clique number on every induced subgraph.
    """
    _require_graph(G)
    if method == "spgt_algebraic":
        return imperfection_certificate(G) is None
    if method == "clique_ass":
        return _clique_ass_condition(G)
    if method == "oracle":
        return _perfect_oracle(G)
    raise DomainError(f"unknown perfect method {method!r}; choose from {PERFECT_METHODS}")


def imperfection_certificate(G: Hypergraph):
    """``("odd hole", W)`` or ``("odd antihole", W)`` from a tall prime of a cover square."""
    _require_graph(G)
    for label, H in (("odd hole", G), ("odd antihole", complement(G))):
        for p in _ass_or_empty(cover_ideal(H), 2):
            if p.height > 3:
                return label, _prime_names(p)
    return None


# -- associated primes of powers -------------------------------------------


@dataclass
class AssProfile:
    """Associated primes of ``S/I^s`` for ``s = 1 .. s_max`` with two diagnostics.

    ``persistence_failures`` lists each ``s`` with ``Ass(I^s)`` not inside
    ``Ass(I^(s+1))``; ``saturated[s]`` tells whether every non-minimal prime of
    ``I^s`` sits directly above an associated prime one lower in height.
    """

    primes: dict
    persistence_failures: list = field(default_factory=list)
    saturated: dict = field(default_factory=dict)

    @property
    def s_max(self) -> int:
        return max(self.primes)

    @property
    def persistent(self) -> bool:
        return not self.persistence_failures

    def new_primes(self, s: int) -> list:
        before = set().union(*(set(self.primes[t]) for t in range(1, s)))
        return [p for p in self.primes[s] if p not in before]

    def to_json(self) -> dict:
        return {str(s): [list(p.support) for p in ps] for s, ps in sorted(self.primes.items())}


def has_saturated_chains(primes) -> bool:
    primes = list(primes)
    minimal = [p for p in primes if not any(set(q.support) < set(p.support) for q in primes)]
    for p in primes:
        if p in minimal:
            continue
        below = set(p.support)
        if not any(set(q.support) < below and q.height == p.height - 1 for q in primes):
            return False
    return True


def ass_profile(I: MonomialIdeal, s_max: int = 4, limit: int = MAX_PROFILE_POWER) -> AssProfile:
    if s_max < 1:
        raise DomainError("s_max must be positive")
    if s_max > limit:
        raise ResourceLimitError(
            f"s_max={s_max} exceeds the power guard {limit}",
            bound="MAX_PROFILE_POWER",
            flag="--max-power",
        )
    primes = {s: associated_primes(power(I, s)) for s in range(1, s_max + 1)}
    failures = [s for s in range(1, s_max) if not set(primes[s]) <= set(primes[s + 1])]
    saturated = {s: has_saturated_chains(ps) for s, ps in primes.items()}
    return AssProfile(primes, failures, saturated)


def expansion_ass_primes(G: Hypergraph, s: int, max_vertices: int = MAX_EXPANSION_VERTICES):
    """Associated primes of ``S/J(G)^s`` from critical sets of the expansion.

    Returns ``(D, primes)`` where ``D`` is generated by the depolarizations
    of the vertex sets ``T`` of ``G^s`` with ``chi(G^s_T) > s`` (which should
    equal the dual of ``J^s`` with respect to ``(s, ..., s)``) and ``primes``
    are the supports of its minimal generators.
    """
    if s < 1:
        raise DomainError("s must be positive")
    if G.n * s > max_vertices:
        raise ResourceLimitError(
            f"expansion has {G.n * s} vertices, above the bound {max_vertices}",
            bound="max_vertices",
            flag="--max-vertices",
        )
    EG = expansion(G, s)
    gens = []
    for T in minimal_noncolorable(EG.graph, s):
        e = [0] * G.n
        for i in _bits(T):
            e[EG.flavor_of[i]] += 1
        gens.append(tuple(e))
    D = MonomialIdeal(G.vertices, gens)
    primes = sorted({MonomialPrime(G.vertices, g.support) for g in D.gens})
    return D, primes

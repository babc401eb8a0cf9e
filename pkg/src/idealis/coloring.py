"""Hypergraph colorability by three independent routes.

``oracle``
    Backtracking search for a proper coloring.
``cover``
    ``G`` is k-colorable iff ``m^(k-1)`` lies in ``J(G)^k``, ``m`` the product
    of all variables.
``secant``
    ``G`` is k-colorable iff ``m`` is not in the secant power ``I(G)^{k}``,
    whose squarefree generators are the vertex sets inducing non-k-colorable
    subhypergraphs.

The secant power is built from a table of k-colorability of *every* induced
subhypergraph at once: with ``i(X)`` the number of independent sets inside
``X``, the alternating sum ``sum_{X <= T} (-1)^|T - X| i(X)^k`` counts the
k-tuples of independent sets covering ``T`` exactly, so it is positive iff
``T`` is k-colorable.  Both transforms are vectorized over the subset lattice.
"""
from __future__ import annotations

import math

import numpy as np

from .errors import DomainError, LoopError, ResourceLimitError
from .hypergraph import Hypergraph, _bits, cover_ideal, induced
from .monomials import MonomialIdeal, power_contains

__all__ = [
    "METHODS",
    "MAX_TABLE_VERTICES",
    "find_coloring",
    "is_k_colorable",
    "chromatic_number",
    "colorable_table",
    "minimal_noncolorable",
    "secant_power",
    "critical_subsets",
    "is_critically_chromatic",
]

METHODS = ("oracle", "cover", "secant")

# 2**22 subsets is 32 MiB per int64 table.
MAX_TABLE_VERTICES = 22


def _require_loopless(G: Hypergraph) -> None:
    if G.has_loops:
        loops = [e[0] for e in G.edges if len(e) == 1]
        raise LoopError(
            f"coloring needs every edge to have at least two vertices; loops at {loops}"
        )


def find_coloring(G: Hypergraph, k: int) -> dict | None:
    """Lexicographically least proper k-coloring as ``{vertex: color}``, colors from 1."""
    _require_loopless(G)
    if k < 1:
        raise DomainError("k must be positive")
    n = G.n
    # an edge is checked once its highest vertex gets a color
    closing = [[] for _ in range(n)]
    for e in G.masks:
        closing[e.bit_length() - 1].append(list(_bits(e)))
    colors = [0] * n

    def ok(v):
        for e in closing[v]:
            c = colors[e[0]]
            if all(colors[u] == c for u in e):
                return False
        return True

    def go(v: int, used: int) -> bool:
        if v == n:
            return True
        for c in range(min(k, used + 1)):
            colors[v] = c
            if ok(v) and go(v + 1, max(used, c + 1)):
                return True
        return False

    if not go(0, 0):
        return None
    return {name: c + 1 for name, c in zip(G.vertices.names, colors)}


def _all_ones(G: Hypergraph, k: int):
    return G.vertices.monomial([k] * G.n)


def is_k_colorable(G: Hypergraph, k: int, method: str = "oracle") -> bool:
    _require_loopless(G)
    if k < 1:
        raise DomainError("k must be positive")
    if method == "oracle":
        return find_coloring(G, k) is not None
    if method == "cover":
        return power_contains(cover_ideal(G), k, _all_ones(G, k - 1))
    if method == "secant":
        return _all_ones(G, 1) not in secant_power(G, k)
    raise DomainError(f"unknown coloring method {method!r}; choose from {METHODS}")


def chromatic_number(G: Hypergraph, method: str = "oracle") -> int:
    """Least k >= 1 with ``G`` k-colorable."""
    _require_loopless(G)
    if method == "secant":
        # one table per k; stop at the first k whose secant power is zero
        k = 1
        while not secant_power(G, k).is_zero:
            k += 1
        return k
    k = 1
    while not is_k_colorable(G, k, method):
        k += 1
    return k


def _subset_axes(arr: np.ndarray, b: int):
    """View with axis 1 selecting bit ``b`` of the subset index."""
    return arr.reshape(-1, 2, 1 << b)


def _independent_counts(masks, N: int) -> np.ndarray:
    idx = np.arange(1 << N, dtype=np.int64)
    has_edge = np.zeros(1 << N, dtype=bool)
    for e in masks:
        has_edge |= (idx & e) == e
    counts = (~has_edge).astype(np.int64)
    for b in range(N):
        v = _subset_axes(counts, b)
        v[:, 1, :] += v[:, 0, :]
    return counts


def colorable_table(G: Hypergraph, k: int) -> np.ndarray:
    """Boolean array over all ``2**n`` vertex subsets: is ``G_T`` k-colorable?

    Subset ``T`` is indexed by its bitmask in vertex order.
    """
    _require_loopless(G)
    N = G.n
    if N > MAX_TABLE_VERTICES:
        raise ResourceLimitError(
            f"subset table over {N} vertices exceeds {MAX_TABLE_VERTICES}",
            bound="MAX_TABLE_VERTICES",
            flag="idealis.coloring.MAX_TABLE_VERTICES",
        )
    counts = _independent_counts(G.masks, N)
    top = int(counts.max())
    # |partial Mobius sums| <= 2**N * top**k
    if N + k * math.log2(max(top, 1)) < 62:
        vals = counts ** k
    else:
        vals = np.array([int(c) ** k for c in counts], dtype=object)
    for b in range(N):
        v = _subset_axes(vals, b)
        v[:, 1, :] -= v[:, 0, :]
    return vals > 0


def minimal_noncolorable(G: Hypergraph, k: int) -> list:
    """Bitmasks of inclusion-minimal vertex sets ``T`` with ``G_T`` not k-colorable."""
    col = np.asarray(colorable_table(G, k), dtype=bool)
    hit = ~col
    for b in range(G.n):
        h = _subset_axes(hit, b)
        c = _subset_axes(col, b)
        h[:, 1, :] &= c[:, 0, :]
    return [int(t) for t in np.flatnonzero(hit)]


def secant_power(G: Hypergraph, k: int) -> MonomialIdeal:
    """Squarefree ideal of vertex sets ``W`` with ``chi(G_W) > k``.

    Its minimal generators are the critically ``(k+1)``-chromatic induced
    subhypergraphs; ``k = 1`` gives the edge ideal.
    """
    _require_loopless(G)
    if k < 1:
        raise DomainError("k must be positive")
    n = G.n
    gens = [tuple((t >> i) & 1 for i in range(n)) for t in minimal_noncolorable(G, k)]
    return MonomialIdeal(G.vertices, gens)


def critical_subsets(G: Hypergraph, d: int) -> list:
    """Vertex sets ``W`` with ``G_W`` critically d-chromatic, canonical order."""
    if d < 2:
        raise DomainError("critical subsets are defined here for d >= 2")
    return [tuple(g.support) for g in secant_power(G, d - 1).gens]


def is_critically_chromatic(G: Hypergraph, d: int) -> bool:
    """``chi(G) == d`` and deleting any vertex lowers the chromatic number."""
    _require_loopless(G)
    if chromatic_number(G) != d:
        return False
    names = G.vertices.names
    for v in names:
        H = induced(G, [u for u in names if u != v])
        if is_k_colorable(H, d - 1) is False:
            return False
    return True

"""Small named graphs used in tests, demos and the scan."""
from __future__ import annotations

import itertools

from .hypergraph import Hypergraph

__all__ = [
    "cycle",
    "path",
    "complete",
    "edgeless",
    "from_edge_list",
    "running_example",
    "five_cycle_with_apex",
]


def _names(n: int, prefix: str) -> list:
    return [f"{prefix}{i}" for i in range(1, n + 1)]


def from_edge_list(n: int, edges, prefix: str = "x") -> Hypergraph:
    """Hypergraph on ``x1..xn`` from 0-based index tuples."""
    names = _names(n, prefix)
    return Hypergraph(names, [[names[i] for i in e] for e in edges])


def cycle(n: int, prefix: str = "x") -> Hypergraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)], prefix)


def path(n: int, prefix: str = "x") -> Hypergraph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)], prefix)


def complete(n: int, prefix: str = "x") -> Hypergraph:
    return from_edge_list(n, itertools.combinations(range(n), 2), prefix)


def edgeless(n: int, prefix: str = "x") -> Hypergraph:
    return from_edge_list(n, [], prefix)


def running_example() -> Hypergraph:
    """Seven vertices: a 5-cycle abcde glued along de to a 4-cycle defg."""
    edges = ["ab", "bc", "cd", "de", "ae", "ef", "fg", "dg"]
    return Hypergraph("abcdefg", [list(e) for e in edges])


def five_cycle_with_apex() -> Hypergraph:
    """5-cycle on x1..x5 plus x6 joined to x3, x4, x5.

    Its cover ideal gains the maximal ideal as an associated prime only at the
    third power, although the chromatic number is 3.
    """
    return from_edge_list(
        6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (2, 5), (3, 5), (4, 5)]
    )

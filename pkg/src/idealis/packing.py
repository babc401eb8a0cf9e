"""Integer programming duality for covers and packings of hypergraphs.

For a hypergraph with incidence matrix ``A`` and a weight vector ``c``::

    sigma(c) = max { 1.y : y >= 0 integral, A y <= c }
    gamma(c) = min { c.z : z >= 0 integral, A^T z >= 1 }

Both are solved exactly by branch and bound.  On top of them sit the Konig,
packing and bounded max-flow-min-cut checks and a scan harness that looks for
hypergraphs with the packing property whose symbolic and ordinary powers
differ.
"""
from __future__ import annotations

import itertools
import json
import logging
import math
import os
from dataclasses import dataclass, field

import numpy as np

from .duality import associated_primes
from .errors import DomainError, IdealisError
from .hypergraph import (
    MAX_MINOR_VERTICES,
    Hypergraph,
    _bits,
    _popcount,
    all_minors,
    cover_ideal,
    edge_ideal,
    konig_data,
)
from .monomials import MonomialIdeal, VariableSet, power
from .symbolic import symbolic_gap_witness

log = logging.getLogger(__name__)

__all__ = [
    "INF",
    "RouteDisagreement",
    "incidence_matrix",
    "sigma_gamma",
    "is_k_cover",
    "decompose_cover",
    "packs",
    "packing_property",
    "PackingResult",
    "mfmc_bounded",
    "ntf_bounded",
    "MfmcVerdict",
    "NtfVerdict",
    "enumerate_hypergraphs",
    "cc_scan",
    "ScanReport",
]

INF = math.inf


class RouteDisagreement(IdealisError, AssertionError):
    """Two routes that must agree by theorem produced different answers."""


def incidence_matrix(G: Hypergraph) -> np.ndarray:
    """``n x m`` 0/1 matrix; column ``j`` is the indicator of edge ``j``."""
    A = np.zeros((G.n, len(G.masks)), dtype=np.int64)
    for j, e in enumerate(G.masks):
        for i in _bits(e):
            A[i, j] = 1
    return A


def _finite_vector(G: Hypergraph, c) -> tuple:
    if isinstance(c, dict):
        c = [c.get(v, 0) for v in G.vertices.names]
    c = tuple(c)
    if len(c) != G.n:
        raise DomainError(f"cover vector has {len(c)} entries for {G.n} vertices")
    if any(x == INF for x in c):
        raise DomainError("infinite weights are handled through minors; use packing_property")
    if any(x < 0 or int(x) != x for x in c):
        raise DomainError("cover vector entries must be nonnegative integers")
    return tuple(int(x) for x in c)


def _sigma(masks: list, c: tuple) -> int:
    """Max number of edges, with repetition, packed under capacities ``c``."""
    masks = sorted(masks, key=lambda m: (-_popcount(m), m))
    verts = [list(_bits(m)) for m in masks]
    best = [0]

    def bound(j: int, cap: list) -> int:
        if j == len(masks):
            return 0
        each = sum(min(cap[i] for i in verts[k]) for k in range(j, len(masks)))
        touched = 0
        for k in range(j, len(masks)):
            touched |= masks[k]
        smallest = min(len(verts[k]) for k in range(j, len(masks)))
        return min(each, sum(cap[i] for i in _bits(touched)) // smallest)

    def go(j: int, total: int, cap: list):
        if total > best[0]:
            best[0] = total
        if j == len(masks) or total + bound(j, cap) <= best[0]:
            return
        top = min(cap[i] for i in verts[j])
        for y in range(top, -1, -1):
            for i in verts[j]:
                cap[i] -= y
            go(j + 1, total + y, cap)
            for i in verts[j]:
                cap[i] += y

    go(0, 0, list(c))
    return best[0]


def _gamma(masks: list, c: tuple) -> int:
    """Minimum ``c``-weight of a vertex cover; 0/1 covers suffice."""
    if not masks:
        return 0
    best = [sum(c)]

    def go(cost: int, rest: list):
        if cost >= best[0]:
            return
        if not rest:
            best[0] = cost
            return
        e = min(rest, key=_popcount)
        for v in sorted(_bits(e), key=lambda i: c[i]):
            bit = 1 << v
            go(cost + c[v], [f for f in rest if not f & bit])

    go(0, list(masks))
    return best[0]


def sigma_gamma(G: Hypergraph, c) -> tuple:
    """Exact integer optima ``(sigma(c), gamma(c))``; always ``sigma <= gamma``."""
    c = _finite_vector(G, c)
    return _sigma(list(G.masks), c), _gamma(list(G.masks), c)


def is_k_cover(G: Hypergraph, c, k: int) -> bool:
    """Every edge has total weight at least ``k``."""
    c = _finite_vector(G, c)
    return all(sum(c[i] for i in _bits(e)) >= k for e in G.masks)


def decompose_cover(G: Hypergraph, c, k: int):
    """Write ``c`` as (at least) a sum of ``k`` vertex covers of ``G``.

    Returns ``k`` 0/1 tuples, each a vertex cover, whose sum is at most ``c``
    componentwise, or None.  Leftover weight is handed to the covers in
    order, so ``k = 1`` returns ``c`` truncated to 0/1 when ``c`` is a cover.
    """
    c = _finite_vector(G, c)
    if k < 0:
        raise DomainError("k must be nonnegative")
    if k == 0:
        return []
    minimal = list(cover_ideal(G).exps)
    picked = []

    def go(start: int, rem: tuple) -> bool:
        if len(picked) == k:
            return True
        for i in range(start, len(minimal)):
            w = minimal[i]
            if all(x <= r for x, r in zip(w, rem)):
                picked.append(w)
                if go(i, tuple(r - x for r, x in zip(rem, w))):
                    return True
                picked.pop()
        return False

    if not go(0, c):
        return None
    covers = [list(w) for w in picked]
    for v in range(G.n):
        slack = c[v] - sum(w[v] for w in covers)
        for w in covers:
            if slack <= 0:
                break
            if w[v] == 0:
                w[v] = 1
                slack -= 1
    return [tuple(w) for w in covers]


def packs(G: Hypergraph) -> bool:
    """Integral optima at ``c = 1``, i.e. ``G`` is Konig."""
    return konig_data(G).is_konig


@dataclass
class PackingResult:
    holds: bool
    minor: Hypergraph | None = None
    alpha0: int | None = None
    beta1: int | None = None

    def __bool__(self) -> bool:
        return self.holds


def packing_property(G: Hypergraph, max_vertices: int = MAX_MINOR_VERTICES) -> PackingResult:
    """``G`` and all of its minors are Konig; on failure report the first bad minor."""
    for H in all_minors(G, max_vertices):
        a, b, ok = konig_data(H)
        if not ok:
            return PackingResult(False, H, a, b)
    return PackingResult(True)


@dataclass
class MfmcVerdict:
    """Bounded max-flow-min-cut check; ``holds`` only means up to ``q_max``."""

    holds: bool
    q_max: int
    q: int | None = None
    witness: object = None

    def __str__(self) -> str:
        if self.holds:
            return f"holds-up-to-bound q<={self.q_max}"
        return f"fails-at-q={self.q} witness {self.witness}"

    @property
    def label(self) -> str:
        return "holds-up-to-bound" if self.holds else "fails-at-q"


@dataclass
class NtfVerdict:
    holds: bool
    q_max: int
    q: int | None = None
    new_primes: list = field(default_factory=list)
    lost_primes: list = field(default_factory=list)

    def __str__(self) -> str:
        if self.holds:
            return f"holds-up-to-bound q<={self.q_max}"
        new = ", ".join(str(p) for p in self.new_primes) or "none"
        lost = ", ".join(str(p) for p in self.lost_primes) or "none"
        return f"diverges-at-q={self.q} new: {new} lost: {lost}"


def _as_edge_ideal(G_or_I) -> MonomialIdeal:
    return edge_ideal(G_or_I) if isinstance(G_or_I, Hypergraph) else G_or_I


def _trivial(I: MonomialIdeal) -> bool:
    return I.is_zero or I.is_unit


def mfmc_bounded(G, q_max: int) -> MfmcVerdict:
    """Compare ``I^(q)`` with ``I^q`` for the edge ideal, ``q = 1 .. q_max``."""
    if q_max < 2:
        raise DomainError("q_max must be at least 2")
    I = _as_edge_ideal(G)
    if _trivial(I):
        return MfmcVerdict(True, q_max)
    for q in range(1, q_max + 1):
        w = symbolic_gap_witness(I, q)
        if w is not None:
            return MfmcVerdict(False, q_max, q, w)
    return MfmcVerdict(True, q_max)


def ntf_bounded(I, q_max: int, cross_check: bool = False) -> NtfVerdict:
    """Compare ``Ass(S/I^q)`` with ``Ass(S/I)`` for ``q = 2 .. q_max``.

    With ``cross_check`` the symbolic-versus-ordinary comparison is run at every
    ``q`` as well and any disagreement raises :class:`RouteDisagreement`.
    """
    if q_max < 2:
        raise DomainError("q_max must be at least 2")
    I = _as_edge_ideal(I)
    if _trivial(I):
        return NtfVerdict(True, q_max)
    base = set(associated_primes(I))
    for q in range(2, q_max + 1):
        now = set(associated_primes(power(I, q)))
        same = now == base
        if cross_check and same != (symbolic_gap_witness(I, q) is None):
            raise RouteDisagreement(
                f"at q={q}: Ass comparison says {same}, symbolic comparison disagrees for {I}"
            )
        if not same:
            return NtfVerdict(False, q_max, q, sorted(now - base), sorted(base - now))
    return NtfVerdict(True, q_max)


# -- scan harness -----------------------------------------------------------


def enumerate_hypergraphs(n: int, edge_size_cap: int, graphs_only: bool = False):
    """All simple hypergraphs on ``x1..xn`` with edge sizes up to the cap.

    With ``graphs_only`` every edge has exactly two vertices.
    """
    R = VariableSet.standard(n)
    sizes = [2] if graphs_only else range(1, min(edge_size_cap, n) + 1)
    cands = [
        sum(1 << i for i in c)
        for k in sizes
        for c in itertools.combinations(range(n), k)
    ]

    def go(i: int, chosen: list):
        if i == len(cands):
            yield Hypergraph._from_masks(R, chosen)
            return
        yield from go(i + 1, chosen)
        m = cands[i]
        if all(m & e != e and m & e != m for e in chosen):
            chosen.append(m)
            yield from go(i + 1, chosen)
            chosen.pop()

    yield from go(0, [])


def _scan_one(args) -> dict:
    G, q_max = args
    pk = packing_property(G)
    rec = {"canonical_form": G.canonical_form(), "packing": bool(pk.holds), "q_max": q_max}
    if pk.holds:
        v = mfmc_bounded(G, q_max)
        rec["mfmc_verdict"] = v.label
        if not v.holds:
            rec["q"] = v.q
            rec["witness"] = str(v.witness)
    else:
        rec["mfmc_verdict"] = "skipped"
    return rec


@dataclass
class ScanReport:
    records: list
    candidates: list

    @property
    def counts(self) -> dict:
        return {
            "scanned": len(self.records),
            "packing": sum(r["packing"] for r in self.records),
            "candidates": len(self.candidates),
        }


def cc_scan(
    n_max: int = 6,
    q_max: int = 3,
    edge_size_cap: int = 3,
    graphs_only: bool = False,
    resume: str | os.PathLike | None = None,
    jobs: int = 1,
) -> ScanReport:
    """Look for packing hypergraphs whose edge ideal has ``I^(q) != I^q``.

    Hypergraphs on ``x1..xn`` for ``n = 1 .. n_max`` are enumerated by labeled
    canonical form.  ``resume`` names a JSON-lines file: existing records are
    reused and new ones appended.  Records are reported sorted by form.
    """
    done = {}
    if resume is not None and os.path.exists(resume):
        with open(resume) as fh:
            for line in fh:
                if line.strip():
                    rec = json.loads(line)
                    # verdicts from a different bound are recomputed
                    if rec.get("q_max") == q_max:
                        done[rec["canonical_form"]] = rec
    todo = []
    wanted = []
    for n in range(1, n_max + 1):
        for G in enumerate_hypergraphs(n, edge_size_cap, graphs_only):
            form = G.canonical_form()
            wanted.append(form)
            if form not in done:
                todo.append((G, q_max))
    log.info("cc_scan: %d cached, %d to check", len(done), len(todo))

    out = open(resume, "a") if resume is not None else None
    try:
        if jobs > 1:
            import multiprocessing

            with multiprocessing.Pool(jobs) as pool:
                results = pool.imap(_scan_one, todo, chunksize=16)
                for rec in results:
                    done[rec["canonical_form"]] = rec
                    if out:
                        out.write(json.dumps(rec, sort_keys=True) + "\n")
        else:
            for item in todo:
                rec = _scan_one(item)
                done[rec["canonical_form"]] = rec
                if out:
                    out.write(json.dumps(rec, sort_keys=True) + "\n")
                    out.flush()
    finally:
        if out:
            out.close()
    records = [done[k] for k in sorted(set(wanted))]
    cands = [r for r in records if r["packing"] and r["mfmc_verdict"] == "fails-at-q"]
    return ScanReport(records, cands)

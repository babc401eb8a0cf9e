"""Simple hypergraphs and their edge/cover ideals, minors and expansions.

Vertices are the variables of a :class:`~idealis.monomials.VariableSet`, so a
squarefree monomial and a vertex subset are the same thing.  Edges are stored
as integer bitmasks over the vertex order.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .duality import squarefree_dual
from .errors import DomainError, ParseError, ResourceLimitError, SquarefreeError, StructuralError
from .monomials import Monomial, MonomialIdeal, VariableSet, _key, _same_ring

__all__ = [
    "Hypergraph",
    "ExpandedHypergraph",
    "KonigData",
    "edge_ideal",
    "cover_ideal",
    "from_ideal",
    "dual_hypergraph",
    "induced",
    "complement",
    "konig_data",
    "min_cover_size",
    "max_matching_size",
    "minor",
    "all_minors",
    "expansion",
    "expansion_at",
    "depolarize",
    "parse_hypergraph",
    "format_hypergraph",
    "hypergraph_from_json",
    "MAX_MINOR_VERTICES",
]

MAX_MINOR_VERTICES = 10


def _bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def _edge_key(mask: int, n: int):
    return _key(tuple((mask >> i) & 1 for i in range(n)))


def _antichain(masks: Iterable[int]) -> list:
    """Inclusion-minimal masks."""
    out = []
    for m in sorted(set(masks), key=_popcount):
        if not any(k & m == k for k in out):
            out.append(m)
    return out


class Hypergraph:
    """A simple hypergraph: no edge contains another.

    Parameters
    ----------
    vertices :
        A :class:`VariableSet` or a sequence of vertex names.
    edges :
        Iterable of vertex-name collections.  Loops (singleton edges) are
        allowed; empty edges are not.
    """

    __slots__ = ("vertices", "masks")

    def __init__(self, vertices, edges: Iterable = ()):
        if not isinstance(vertices, VariableSet):
            vertices = VariableSet(tuple(vertices))
        masks = set()
        for e in edges:
            m = 0
            for v in e:
                m |= 1 << vertices.index(v)
            if m == 0:
                raise StructuralError("empty edge")
            masks.add(m)
        for a, b in itertools.permutations(masks, 2):
            if a & b == a:
                raise StructuralError(
                    f"not simple: edge {_names(vertices, a)} is contained in {_names(vertices, b)}"
                )
        self.vertices = vertices
        self.masks = _sort_masks(masks, len(vertices))

    @classmethod
    def _from_masks(cls, vertices: VariableSet, masks: Iterable[int]) -> "Hypergraph":
        obj = cls.__new__(cls)
        obj.vertices = vertices
        obj.masks = _sort_masks(masks, len(vertices))
        return obj

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def edges(self) -> tuple:
        """Edges as tuples of vertex names, canonical order."""
        return tuple(_names(self.vertices, m) for m in self.masks)

    @property
    def is_graph(self) -> bool:
        return all(_popcount(m) == 2 for m in self.masks)

    @property
    def has_loops(self) -> bool:
        return any(_popcount(m) == 1 for m in self.masks)

    def vertex_mask(self, names: Iterable) -> int:
        m = 0
        for v in names:
            m |= 1 << self.vertices.index(v)
        return m

    def key(self):
        """Labeled canonical form: vertex names and sorted edge list."""
        return (self.vertices.names, self.edges)

    def canonical_form(self) -> str:
        return " ".join(self.vertices.names) + " | " + "; ".join(" ".join(e) for e in self.edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.vertices.names == other.vertices.names and self.masks == other.masks

    def __hash__(self) -> int:
        return hash((self.vertices.names, self.masks))

    def __repr__(self) -> str:
        return f"Hypergraph({self.canonical_form()})"

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices.names), "edges": [list(e) for e in self.edges]}


def _sort_masks(masks, n) -> tuple:
    return tuple(sorted(set(masks), key=lambda m: _edge_key(m, n)))


def _names(vertices: VariableSet, mask: int) -> tuple:
    return tuple(vertices.names[i] for i in _bits(mask))


def _mask_exps(mask: int, n: int) -> tuple:
    return tuple((mask >> i) & 1 for i in range(n))


def edge_ideal(G: Hypergraph) -> MonomialIdeal:
    return MonomialIdeal(G.vertices, [_mask_exps(m, G.n) for m in G.masks])


def cover_ideal(G: Hypergraph) -> MonomialIdeal:
    """Generated by the minimal vertex covers; (1) for an edgeless hypergraph."""
    return squarefree_dual(edge_ideal(G))


def from_ideal(I: MonomialIdeal) -> Hypergraph:
    """The hypergraph whose edges are the generators of a squarefree ideal."""
    if not I.is_squarefree:
        raise SquarefreeError("only squarefree ideals correspond to hypergraphs")
    if I.is_unit:
        raise DomainError("the unit ideal has no hypergraph (its generator is the empty set)")
    masks = [sum(1 << i for i, x in enumerate(e) if x) for e in I.exps]
    return Hypergraph._from_masks(I.ring, masks)


def dual_hypergraph(G: Hypergraph) -> Hypergraph:
    """Edges are the minimal vertex covers of ``G``."""
    if not G.masks:
        raise DomainError("the dual of an edgeless hypergraph is undefined")
    return from_ideal(cover_ideal(G))


def induced(G: Hypergraph, W: Iterable) -> Hypergraph:
    W = list(W)
    w = G.vertex_mask(W)
    verts = VariableSet(tuple(v for i, v in enumerate(G.vertices.names) if (w >> i) & 1))
    keep = [_names(G.vertices, m) for m in G.masks if m & w == m]
    return Hypergraph(verts, keep)


def complement(G: Hypergraph) -> Hypergraph:
    """Complement of a graph on the same vertex set."""
    if not G.is_graph:
        raise DomainError("complement is defined for graphs only")
    present = set(G.masks)
    n = G.n
    masks = [(1 << i) | (1 << j) for i in range(n) for j in range(i + 1, n)]
    return Hypergraph._from_masks(G.vertices, [m for m in masks if m not in present])


# -- covers and matchings ------------------------------------------------


def min_cover_size(masks, n: int) -> int:
    """Minimum vertex cover by branching on the first uncovered edge."""
    masks = list(masks)
    if not masks:
        return 0
    best = [n]

    def lower_bound(rest):
        # pairwise-disjoint uncovered edges each need their own vertex
        used = 0
        count = 0
        for e in rest:
            if e & used == 0:
                used |= e
                count += 1
        return count

    def go(chosen: int, size: int, rest: list):
        if not rest:
            best[0] = min(best[0], size)
            return
        if size + lower_bound(rest) >= best[0]:
            return
        e = rest[0]
        for v in _bits(e):
            bit = 1 << v
            go(chosen | bit, size + 1, [f for f in rest if not f & bit])

    go(0, 0, masks)
    return best[0]


def max_matching_size(masks) -> int:
    """Largest set of pairwise-disjoint edges (exhaustive branch and bound)."""
    masks = sorted(masks, key=_popcount)
    best = [0]

    def go(i: int, used: int, size: int):
        if size > best[0]:
            best[0] = size
        if i == len(masks):
            return
        free = [m for m in masks[i:] if m & used == 0]
        if size + len(free) <= best[0]:
            return
        for j in range(i, len(masks)):
            m = masks[j]
            if m & used == 0:
                go(j + 1, used | m, size + 1)

    go(0, 0, 0)
    return best[0]


class KonigData(NamedTuple):
    alpha0: int
    beta1: int
    is_konig: bool


def konig_data(G: Hypergraph) -> KonigData:
    """Minimum cover size, maximum matching size, and whether they agree."""
    a = min_cover_size(G.masks, G.n)
    b = max_matching_size(G.masks)
    return KonigData(a, b, a == b)


# -- minors --------------------------------------------------------------


def _minor_masks(masks, n: int, deleted: int, contracted: int):
    """Edges of the minor, re-indexed onto the surviving vertices."""
    out = []
    for m in masks:
        if m & deleted:
            continue
        r = m & ~contracted
        if r:
            out.append(r)
    survivors = [i for i in range(n) if not ((deleted | contracted) >> i) & 1]
    remap = {old: new for new, old in enumerate(survivors)}
    new_masks = []
    for r in _antichain(out):
        new_masks.append(sum(1 << remap[i] for i in _bits(r)))
    return survivors, new_masks


def minor(G: Hypergraph, v, mode: str) -> Hypergraph:
    """Deletion ``G \\ v`` or contraction ``G / v``.

    Contraction drops edges that become empty (a contracted loop), so it can
    differ from :func:`~idealis.monomials.minor_step`, which then yields (1).
    """
    i = G.vertices.index(v)
    bit = 1 << i
    if mode == "delete":
        survivors, masks = _minor_masks(G.masks, G.n, bit, 0)
    elif mode == "contract":
        survivors, masks = _minor_masks(G.masks, G.n, 0, bit)
    else:
        raise DomainError(f"minor mode must be 'delete' or 'contract', not {mode!r}")
    return Hypergraph._from_masks(G.vertices.without(i), masks)


def all_minors(G: Hypergraph, max_vertices: int = MAX_MINOR_VERTICES) -> list:
    """Every distinct minor of ``G``, including ``G``, deduplicated by labeled form.

    A minor is determined by the disjoint pair (deleted set, contracted set)
    because deletions and contractions at distinct vertices commute.
    """
    if G.n > max_vertices:
        raise ResourceLimitError(
            f"all_minors on {G.n} vertices exceeds the bound {max_vertices}; "
            "use a bounded scan or raise max_vertices",
            bound="max_vertices",
            flag="--max-minor-vertices",
        )
    seen = {}
    n = G.n
    for assign in itertools.product((0, 1, 2), repeat=n):
        deleted = sum(1 << i for i, a in enumerate(assign) if a == 1)
        contracted = sum(1 << i for i, a in enumerate(assign) if a == 2)
        survivors, masks = _minor_masks(G.masks, n, deleted, contracted)
        verts = tuple(G.vertices.names[i] for i in survivors)
        k = (verts, tuple(sorted(masks)))
        if k not in seen:
            seen[k] = Hypergraph._from_masks(VariableSet(verts), masks)
    return sorted(seen.values(), key=lambda H: (-H.n, H.vertices.names, H.masks))


# -- expansion -----------------------------------------------------------


@dataclass(frozen=True)
class ExpandedHypergraph:
    """The ``s``-th expansion: flavors ``v.1 .. v.s`` of every base vertex.

    ``flavor_of[i]`` is the base-vertex index of expanded vertex ``i``.
    """

    base: Hypergraph
    s: int
    graph: Hypergraph
    flavor_of: tuple

    @property
    def vertices(self) -> VariableSet:
        return self.graph.vertices

    def depolarize(self, m) -> Monomial:
        return depolarize(m, self)


def expansion(G: Hypergraph, s: int) -> ExpandedHypergraph:
    """Flavor edges ``v.j v.k`` (j != k) plus every flavor assignment of every edge."""
    if s < 1:
        raise DomainError("expansion needs s >= 1")
    n = G.n
    names = tuple(f"{v}.{j}" for v in G.vertices.names for j in range(1, s + 1))
    flavor_of = tuple(i for i in range(n) for _ in range(s))

    def vid(i, j):
        return i * s + j

    masks = []
    for i in range(n):
        for j, k in itertools.combinations(range(s), 2):
            masks.append((1 << vid(i, j)) | (1 << vid(i, k)))
    for e in G.masks:
        verts = list(_bits(e))
        for flav in itertools.product(range(s), repeat=len(verts)):
            masks.append(sum(1 << vid(i, j) for i, j in zip(verts, flav)))
    graph = Hypergraph._from_masks(VariableSet(names), _antichain(masks))
    return ExpandedHypergraph(G, s, graph, flavor_of)


def expansion_at(G: Hypergraph, W: Iterable) -> Hypergraph:
    """Duplicate each vertex of ``W`` into ``w.1, w.2`` joined by an edge."""
    if not G.is_graph:
        raise DomainError("expansion at a vertex set is defined for graphs only")
    w = G.vertex_mask(W)
    names = []
    copies = []
    for i, v in enumerate(G.vertices.names):
        if (w >> i) & 1:
            copies.append([len(names), len(names) + 1])
            names += [f"{v}.1", f"{v}.2"]
        else:
            copies.append([len(names)])
            names.append(v)
    masks = []
    for c in copies:
        if len(c) == 2:
            masks.append((1 << c[0]) | (1 << c[1]))
    for e in G.masks:
        a, b = _bits(e)
        for p in copies[a]:
            for q in copies[b]:
                masks.append((1 << p) | (1 << q))
    return Hypergraph._from_masks(VariableSet(tuple(names)), masks)


def depolarize(m, EG: ExpandedHypergraph) -> Monomial:
    """Send every flavor ``x_{i,j}`` back to ``x_i``."""
    if isinstance(m, Monomial):
        _same_ring(m.ring, EG.vertices)
        exps = m.exps
    else:
        exps = EG.vertices.monomial(m).exps
    out = [0] * EG.base.n
    for i, x in enumerate(exps):
        out[EG.flavor_of[i]] += x
    return Monomial(EG.base.vertices, tuple(out))


# -- text and JSON formats -------------------------------------------------


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse the line-oriented hypergraph format.

    An optional ``vertices: a b c`` header fixes the vertex order; otherwise
    vertices are numbered in order of first appearance.  Each remaining
    non-blank line is one edge.  ``#`` starts a comment.
    """
    verts = None
    order = []
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        stripped = line.lstrip()
        col0 = len(line) - len(stripped) + 1
        if stripped.startswith("vertices:"):
            if verts is not None or edges:
                raise ParseError("vertices header must come first and only once", lineno, col0)
            rest = stripped[len("vertices:") :]
            verts = []
            for tok, col in _tokens(rest, col0 + len("vertices:")):
                _check_name(tok, lineno, col)
                if tok in verts:
                    raise ParseError(f"duplicate vertex {tok!r}", lineno, col)
                verts.append(tok)
            continue
        edge = []
        for tok, col in _tokens(line, 1):
            _check_name(tok, lineno, col)
            if verts is not None and tok not in verts:
                raise ParseError(f"unknown vertex {tok!r}", lineno, col)
            if verts is None and tok not in order:
                order.append(tok)
            edge.append(tok)
        edges.append((lineno, edge))
    vs = VariableSet(tuple(verts if verts is not None else order))
    masks = {}
    for lineno, e in edges:
        m = 0
        for v in e:
            m |= 1 << vs.index(v)
        masks.setdefault(m, lineno)
    for a, b in itertools.permutations(masks, 2):
        if a & b == a:
            raise ParseError(
                f"edge {' '.join(_names(vs, b))} contains edge {' '.join(_names(vs, a))}; "
                "hypergraphs must be simple",
                max(masks[a], masks[b]),
                1,
            )
    return Hypergraph._from_masks(vs, masks)


def _tokens(line: str, col0: int):
    i = 0
    while i < len(line):
        if line[i].isspace():
            i += 1
            continue
        j = i
        while j < len(line) and not line[j].isspace():
            j += 1
        yield line[i:j], col0 + i
        i = j


def _check_name(tok: str, line: int, col: int) -> None:
    from .monomials import _NAME_RE

    if not _NAME_RE.match(tok):
        raise ParseError(f"invalid vertex name {tok!r}", line, col)


def format_hypergraph(G: Hypergraph) -> str:
    lines = ["vertices: " + " ".join(G.vertices.names)]
    lines += [" ".join(e) for e in G.edges]
    return "\n".join(lines) + "\n"


def hypergraph_from_json(data) -> Hypergraph:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        return Hypergraph(data["vertices"], data["edges"])
    except (KeyError, TypeError) as exc:
        raise ParseError(f"hypergraph JSON needs 'vertices' and 'edges': {exc}") from None

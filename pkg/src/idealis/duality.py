"""Alexander duality, irreducible decomposition and associated primes."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError, SquarefreeError, StructuralError
from .monomials import (
    MonomialIdeal,
    VariableSet,
    _format_exps,
    _minimal,
    _same_ring,
    intersect,
)

__all__ = [
    "MonomialPrime",
    "IrreducibleComponent",
    "squarefree_dual",
    "generalized_dual",
    "irreducible_decomposition",
    "associated_primes",
    "intersect_components",
    "components_to_json",
    "components_from_json",
]


@dataclass(frozen=True)
class MonomialPrime:
    """The prime generated by the variables in ``support`` (ring order)."""

    ring: VariableSet
    support: tuple

    def __post_init__(self):
        idx = sorted({self.ring.index(v) for v in self.support})
        object.__setattr__(self, "support", tuple(self.ring.names[i] for i in idx))

    @property
    def height(self) -> int:
        return len(self.support)

    @property
    def indices(self) -> tuple:
        return tuple(self.ring.index(v) for v in self.support)

    def as_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.ring, [self.ring.var(v) for v in self.support])

    def sort_key(self):
        return self.indices

    def __lt__(self, other: "MonomialPrime") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return "(" + ", ".join(self.support) + ")"


@dataclass(frozen=True)
class IrreducibleComponent:
    """``(x_i^{b_i} : b_i present)``; ``None`` in ``bounds`` means exponent infinity."""

    ring: VariableSet
    bounds: tuple

    def __post_init__(self):
        b = tuple(None if x is None else int(x) for x in self.bounds)
        if len(b) != len(self.ring):
            raise StructuralError("bound vector length does not match the variable set")
        if all(x is None for x in b):
            raise DomainError("an irreducible component needs at least one variable")
        if any(x is not None and x < 1 for x in b):
            raise DomainError("irreducible bounds must be positive integers or None")
        object.__setattr__(self, "bounds", b)

    @classmethod
    def from_map(cls, ring: VariableSet, bounds: dict) -> "IrreducibleComponent":
        b = [None] * len(ring)
        for v, e in bounds.items():
            b[ring.index(v)] = e
        return cls(ring, tuple(b))

    @property
    def radical(self) -> MonomialPrime:
        return MonomialPrime(self.ring, self.support)

    @property
    def support(self) -> tuple:
        return tuple(v for v, b in zip(self.ring.names, self.bounds) if b is not None)

    def items(self):
        return [(i, b) for i, b in enumerate(self.bounds) if b is not None]

    def as_ideal(self) -> MonomialIdeal:
        gens = []
        for i, b in self.items():
            e = [0] * len(self.ring)
            e[i] = b
            gens.append(tuple(e))
        return MonomialIdeal(self.ring, gens)

    def contains_component(self, other: "IrreducibleComponent") -> bool:
        """``other`` is a subideal of ``self``."""
        for i, b in other.items():
            mine = self.bounds[i]
            if mine is None or b < mine:
                return False
        return True

    def sort_key(self):
        items = self.items()
        return (tuple(i for i, _ in items), tuple(b for _, b in items))

    def __lt__(self, other: "IrreducibleComponent") -> bool:
        return self.sort_key() < other.sort_key()

    def to_json(self) -> dict:
        return {"bounds": {self.ring.names[i]: b for i, b in self.items()}}

    def __str__(self) -> str:
        parts = []
        for i, b in self.items():
            e = [0] * len(self.ring)
            e[i] = b
            parts.append(_format_exps(self.ring, tuple(e)))
        return "(" + ", ".join(parts) + ")"


def _meet_irreducible(gens: Iterable[tuple], bounds: Sequence) -> tuple:
    """Minimal generators of ``(gens) & (x_i^e : (i, e) in bounds)``."""
    out = []
    for d in gens:
        for i, e in bounds:
            if d[i] >= e:
                out.append(d)
                break
        else:
            for i, e in bounds:
                nd = list(d)
                nd[i] = e
                out.append(tuple(nd))
    return _minimal(out)


def _dual_gens(ring: VariableSet, pieces: Iterable[Sequence]) -> tuple:
    """Intersect the irreducible ideals described by ``pieces``, starting from (1)."""
    cur = ((0,) * len(ring),)
    for bounds in pieces:
        cur = _meet_irreducible(cur, bounds)
        if not cur:
            break
    return cur


def squarefree_dual(I: MonomialIdeal) -> MonomialIdeal:
    """Alexander dual: the intersection of the primes of the generators.

    The dual of the zero ideal is (1) and the dual of (1) is (0).
    """
    for e in I.exps:
        if any(x > 1 for x in e):
            raise SquarefreeError(
                f"generator {_format_exps(I.ring, e)} is not squarefree"
            )
    pieces = [[(i, 1) for i, x in enumerate(e) if x] for e in I.exps]
    return MonomialIdeal._from_minimal(I.ring, _dual_gens(I.ring, pieces))


def _check_bound_vector(I: MonomialIdeal, a) -> tuple:
    a = tuple(int(x) for x in a)
    if len(a) != len(I.ring):
        raise StructuralError("bound vector length does not match the variable set")
    if any(x < 0 for x in a):
        raise DomainError("bound vector entries must be nonnegative")
    for e in I.exps:
        if any(x > y for x, y in zip(e, a)):
            raise DomainError(
                f"generator {_format_exps(I.ring, e)} does not divide x^{list(a)}"
            )
    return a


def generalized_dual(I: MonomialIdeal, a) -> MonomialIdeal:
    """Alexander dual of ``I`` with respect to the bound vector ``a``.

    Intersects, over generators ``x^b``, the irreducible ideals
    ``(x_i^{a_i + 1 - b_i} : b_i >= 1)``.
    """
    a = _check_bound_vector(I, a)
    pieces = [[(i, a[i] + 1 - x) for i, x in enumerate(e) if x] for e in I.exps]
    return MonomialIdeal._from_minimal(I.ring, _dual_gens(I.ring, pieces))


def _drop_redundant(comps: list) -> list:
    # irreducible ideals are meet-irreducible: Q is redundant iff it contains another component
    comps = sorted(set(comps))
    keep = []
    for q in comps:
        if not any(p is not q and q.contains_component(p) for p in comps):
            keep.append(q)
    return keep


def irreducible_decomposition(I: MonomialIdeal) -> list:
    """The unique irredundant irreducible decomposition of ``I``.

    Reads the minimal generators ``x^c`` of the dual with respect to
    ``a = lcm(gens)`` back as components ``(x_i^{a_i + 1 - c_i} : c_i >= 1)``.
    Output is sorted by radical, then by bound vector.
    """
    if I.is_zero or I.is_unit:
        raise DomainError("the zero and unit ideals have no irreducible decomposition")
    a = I.lcm_exps()
    dual = generalized_dual(I, a)
    comps = []
    for c in dual.exps:
        bounds = tuple(a[i] + 1 - x if x else None for i, x in enumerate(c))
        comps.append(IrreducibleComponent(I.ring, bounds))
    return _drop_redundant(comps)


def associated_primes(I: MonomialIdeal) -> list:
    """Distinct radicals of the irreducible components, sorted."""
    return sorted({q.radical for q in irreducible_decomposition(I)})


def intersect_components(comps: Sequence[IrreducibleComponent], ring: VariableSet | None = None) -> MonomialIdeal:
    """Intersection of irreducible components; the empty intersection is (1)."""
    if ring is None:
        if not comps:
            raise StructuralError("need a variable set for an empty intersection")
        ring = comps[0].ring
    result = MonomialIdeal.unit(ring)
    for q in comps:
        _same_ring(ring, q.ring)
        result = intersect(result, q.as_ideal())
    return result


def components_to_json(comps: Sequence[IrreducibleComponent]) -> list:
    return [q.to_json() for q in comps]


def components_from_json(data: list, ring: VariableSet) -> list:
    return [IrreducibleComponent.from_map(ring, d["bounds"]) for d in data]

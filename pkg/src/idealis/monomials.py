"""Exact monomials and monomial ideals over a fixed ordered set of variables.

Everything is coefficient free: a monomial is its exponent vector and an ideal
is the antichain of its minimal generators.  Ideals are kept in a canonical
form (generators sorted by total degree, then descending lexicographic
exponent order), so two ideals are equal exactly when their generator tuples
are equal.

Internally the algorithms work on plain ``tuple[int, ...]`` exponent vectors;
:class:`Monomial` is the public wrapper that remembers its variable set.
"""
from __future__ import annotations

import os
import re
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    DomainError,
    ExponentOverflowError,
    ParseError,
    ResourceLimitError,
    StructuralError,
)

__all__ = [
    "MAX_EXPONENT",
    "VariableSet",
    "Monomial",
    "MonomialIdeal",
    "minimalize",
    "contains",
    "power",
    "power_contains",
    "product",
    "intersect",
    "minor_step",
    "parse_monomial",
    "parse_ideal",
    "max_vars",
    "check_vars",
]

# Checked "machine width": exponents are signed 32-bit at most.
MAX_EXPONENT = 2**31 - 1

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_.]*\Z")

Exps = tuple  # tuple[int, ...]


def max_vars() -> int:
    """Variable-count guard; ``IDEALIS_MAX_VARS`` overrides the default 16."""
    raw = os.environ.get("IDEALIS_MAX_VARS")
    if raw is None:
        return 16
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"IDEALIS_MAX_VARS must be an integer, got {raw!r}") from None


def check_vars(n: int, what: str = "input") -> None:
    limit = max_vars()
    if n > limit:
        raise ResourceLimitError(
            f"{what} has {n} variables, above the guard of {limit}",
            bound="max_vars",
            flag="IDEALIS_MAX_VARS",
        )


@dataclass(frozen=True)
class VariableSet:
    """Ordered, duplicate-free variable names shared by a computation."""

    names: tuple

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(set(names)) != len(names):
            raise StructuralError(f"duplicate variable names in {names}")
        for name in names:
            if not isinstance(name, str) or not _NAME_RE.match(name):
                raise StructuralError(f"invalid variable name {name!r}")
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(names)})

    @classmethod
    def standard(cls, n: int, prefix: str = "x") -> "VariableSet":
        """``x1, ..., xn``."""
        return cls(tuple(f"{prefix}{i}" for i in range(1, n + 1)))

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, name) -> bool:
        return name in self._index

    def index(self, name) -> int:
        if isinstance(name, int):
            if not 0 <= name < len(self.names):
                raise StructuralError(f"variable index {name} out of range")
            return name
        try:
            return self._index[name]
        except KeyError:
            raise StructuralError(f"unknown variable {name!r}") from None

    def without(self, name) -> "VariableSet":
        i = self.index(name)
        return VariableSet(self.names[:i] + self.names[i + 1 :])

    def one(self) -> "Monomial":
        return Monomial(self, (0,) * len(self))

    def var(self, name) -> "Monomial":
        e = [0] * len(self)
        e[self.index(name)] = 1
        return Monomial(self, tuple(e))

    def squarefree(self, names: Iterable) -> "Monomial":
        """Monomial of a vertex set."""
        e = [0] * len(self)
        for v in names:
            e[self.index(v)] = 1
        return Monomial(self, tuple(e))

    def monomial(self, value) -> "Monomial":
        """Build a monomial from text, an exponent sequence or a {name: exp} map."""
        if isinstance(value, Monomial):
            _same_ring(self, value.ring)
            return value
        if isinstance(value, str):
            return parse_monomial(value, self)
        if isinstance(value, dict):
            e = [0] * len(self)
            for k, v in value.items():
                e[self.index(k)] = int(v)
            return Monomial(self, tuple(e))
        return Monomial(self, tuple(int(x) for x in value))

    def ideal(self, gens) -> "MonomialIdeal":
        if isinstance(gens, str):
            return parse_ideal(gens, self)
        return MonomialIdeal(self, [self.monomial(g) for g in gens])

    def __str__(self):
        return " ".join(self.names)


def _same_ring(a: VariableSet, b: VariableSet) -> None:
    if a is not b and a.names != b.names:
        raise StructuralError(f"variable sets differ: ({a}) vs ({b})")


def _check_exps(e: Exps) -> Exps:
    for x in e:
        if x < 0:
            raise DomainError(f"negative exponent in {e}")
        if x > MAX_EXPONENT:
            raise ExponentOverflowError(f"exponent {x} exceeds {MAX_EXPONENT}")
    return e


def _divides(a: Exps, b: Exps) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _mask(e: Exps) -> int:
    m = 0
    for i, x in enumerate(e):
        if x:
            m |= 1 << i
    return m


def _key(e: Exps):
    return (sum(e), tuple(-x for x in e))


def _minimal(exps: Iterable[Exps]) -> tuple:
    """Divisibility-minimal elements, in canonical order."""
    kept = []
    kept_masks = []
    for e in sorted(set(exps), key=_key):
        me = _mask(e)
        for k, mk in zip(kept, kept_masks):
            if mk & ~me == 0 and _divides(k, e):
                break
        else:
            kept.append(e)
            kept_masks.append(me)
    return tuple(kept)


def _mul(a: Exps, b: Exps) -> Exps:
    return tuple(x + y for x, y in zip(a, b))


def _lcm(a: Exps, b: Exps) -> Exps:
    return tuple(x if x >= y else y for x, y in zip(a, b))


def _overflow_guard(exps: Iterable[Exps]) -> None:
    for e in exps:
        if e and max(e) > MAX_EXPONENT:
            raise ExponentOverflowError(
                f"exponent {max(e)} exceeds {MAX_EXPONENT}; refusing to wrap"
            )


@dataclass(frozen=True)
class Monomial:
    """A monomial ``x^exps`` over ``ring``."""

    ring: VariableSet
    exps: tuple

    def __post_init__(self):
        exps = tuple(int(x) for x in self.exps)
        if len(exps) != len(self.ring):
            raise StructuralError(
                f"exponent vector of length {len(exps)} over {len(self.ring)} variables"
            )
        object.__setattr__(self, "exps", _check_exps(exps))

    @property
    def degree(self) -> int:
        return sum(self.exps)

    @property
    def is_squarefree(self) -> bool:
        return all(x <= 1 for x in self.exps)

    @property
    def support(self) -> tuple:
        return tuple(v for v, x in zip(self.ring.names, self.exps) if x)

    def divides(self, other: "Monomial") -> bool:
        _same_ring(self.ring, other.ring)
        return _divides(self.exps, other.exps)

    def lcm(self, other: "Monomial") -> "Monomial":
        _same_ring(self.ring, other.ring)
        return Monomial(self.ring, _lcm(self.exps, other.exps))

    def __mul__(self, other: "Monomial") -> "Monomial":
        _same_ring(self.ring, other.ring)
        return Monomial(self.ring, _mul(self.exps, other.exps))

    def __pow__(self, k: int) -> "Monomial":
        if k < 0:
            raise DomainError("negative power of a monomial")
        return Monomial(self.ring, tuple(x * k for x in self.exps))

    def __lt__(self, other: "Monomial") -> bool:
        return _key(self.exps) < _key(other.exps)

    def __str__(self) -> str:
        return _format_exps(self.ring, self.exps)

    def __repr__(self) -> str:
        return f"Monomial({self})"


def _format_exps(ring: VariableSet, e: Exps) -> str:
    parts = []
    for name, x in zip(ring.names, e):
        if x == 1:
            parts.append(name)
        elif x > 1:
            parts.append(f"{name}^{x}")
    return "*".join(parts) if parts else "1"


class MonomialIdeal:
    """A monomial ideal stored as its canonical antichain of minimal generators.

    The zero ideal has no generators and the unit ideal has the single
    generator ``1``.  Instances are immutable and hashable.
    """

    __slots__ = ("ring", "_gens")

    def __init__(self, ring: VariableSet, gens: Iterable = ()):
        raw = []
        for g in gens:
            if isinstance(g, Monomial):
                _same_ring(ring, g.ring)
                raw.append(g.exps)
            else:
                e = tuple(int(x) for x in g)
                if len(e) != len(ring):
                    raise StructuralError(
                        f"exponent vector of length {len(e)} over {len(ring)} variables"
                    )
                raw.append(_check_exps(e))
        self.ring = ring
        self._gens = _minimal(raw)

    @classmethod
    def _from_minimal(cls, ring: VariableSet, exps: tuple) -> "MonomialIdeal":
        obj = cls.__new__(cls)
        obj.ring = ring
        obj._gens = exps
        return obj

    @classmethod
    def zero(cls, ring: VariableSet) -> "MonomialIdeal":
        return cls._from_minimal(ring, ())

    @classmethod
    def unit(cls, ring: VariableSet) -> "MonomialIdeal":
        return cls._from_minimal(ring, ((0,) * len(ring),))

    @property
    def exps(self) -> tuple:
        """Raw exponent vectors of the minimal generators, canonical order."""
        return self._gens

    @property
    def gens(self) -> tuple:
        return tuple(Monomial(self.ring, e) for e in self._gens)

    def __len__(self) -> int:
        return len(self._gens)

    @property
    def is_zero(self) -> bool:
        return not self._gens

    @property
    def is_unit(self) -> bool:
        return len(self._gens) == 1 and not any(self._gens[0])

    @property
    def is_squarefree(self) -> bool:
        return all(x <= 1 for e in self._gens for x in e)

    def lcm_exps(self) -> tuple:
        """Componentwise maximum of the generator exponents."""
        n = len(self.ring)
        return tuple(max((e[i] for e in self._gens), default=0) for i in range(n))

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ring.names == other.ring.names and self._gens == other._gens

    def __hash__(self) -> int:
        return hash((self.ring.names, self._gens))

    def __contains__(self, m) -> bool:
        return contains(self, m)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return product(self, other)

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return intersect(self, other)

    def __pow__(self, s: int) -> "MonomialIdeal":
        return power(self, s)

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(_format_exps(self.ring, e) for e in self._gens) + ")"

    def __repr__(self) -> str:
        return f"MonomialIdeal{self}"

    def issubset(self, other: "MonomialIdeal") -> bool:
        """Ideal containment ``self <= other``."""
        _same_ring(self.ring, other.ring)
        return all(_contains_exps(other._gens, e) for e in self._gens)


def _contains_exps(gens: tuple, e: Exps) -> bool:
    for g in gens:
        if _divides(g, e):
            return True
    return False


def minimalize(gens: Iterable[Monomial], ring: VariableSet | None = None) -> MonomialIdeal:
    """Ideal generated by ``gens``, reduced to its minimal generators.

    >>> R = VariableSet(tuple("abcd"))
    >>> print(minimalize([R.monomial("a*b"), R.monomial("a*b*c"), R.monomial("c*d")]))
    (a*b, c*d)
    """
    gens = list(gens)
    if ring is None:
        if not gens:
            raise StructuralError("cannot infer the variable set of an empty generator list")
        ring = gens[0].ring
    return MonomialIdeal(ring, gens)


def _as_exps(I: MonomialIdeal, m) -> Exps:
    if isinstance(m, Monomial):
        _same_ring(I.ring, m.ring)
        return m.exps
    if isinstance(m, str):
        return parse_monomial(m, I.ring).exps
    e = tuple(m)
    if len(e) != len(I.ring):
        raise StructuralError("monomial and ideal have different variable counts")
    return e


def contains(I: MonomialIdeal, m) -> bool:
    """True iff some minimal generator of ``I`` divides ``m``."""
    return _contains_exps(I._gens, _as_exps(I, m))


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_ring(I.ring, J.ring)
    prods = [_mul(a, b) for a in I._gens for b in J._gens]
    _overflow_guard(prods)
    return MonomialIdeal._from_minimal(I.ring, _minimal(prods))


def power(I: MonomialIdeal, s: int) -> MonomialIdeal:
    """``I^s``, minimalizing after every successive product. ``I^0 = (1)``."""
    if s < 0:
        raise DomainError("power exponent must be nonnegative")
    if s == 0:
        return MonomialIdeal.unit(I.ring)
    cur = I._gens
    for _ in range(s - 1):
        prods = [_mul(a, b) for a in cur for b in I._gens]
        _overflow_guard(prods)
        cur = _minimal(prods)
    return MonomialIdeal._from_minimal(I.ring, cur)


def power_contains(I: MonomialIdeal, s: int, m) -> bool:
    """Membership ``m in I^s`` without materializing ``I^s``.

    Searches for generators ``g1 <= ... <= gs`` (as a multiset) whose product
    divides ``m``, exiting as soon as one is found.
    """
    e = _as_exps(I, m)
    if s <= 0:
        return True
    gens = [g for g in I._gens if _divides(g, e)]
    seen = set()

    def search(start: int, left: int, rem: Exps) -> bool:
        if left == 0:
            return True
        key = (start, left, rem)
        if key in seen:
            return False
        for i in range(start, len(gens)):
            g = gens[i]
            if _divides(g, rem):
                if search(i, left - 1, tuple(x - y for x, y in zip(rem, g))):
                    return True
        seen.add(key)
        return False

    return search(0, s, e)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """``I`` intersect ``J`` via the minimalized table of pairwise lcms."""
    _same_ring(I.ring, J.ring)
    if I.is_zero or J.is_zero:
        return MonomialIdeal.zero(I.ring)
    return MonomialIdeal._from_minimal(
        I.ring, _minimal(_lcm(a, b) for a in I._gens for b in J._gens)
    )


def minor_step(I: MonomialIdeal, v, mode: str) -> MonomialIdeal:
    """Set ``v = 0`` (``"delete"``) or ``v = 1`` (``"contract"``) in ``I``.

    The result lives over the variable set with ``v`` removed.
    """
    i = I.ring.index(v)
    ring = I.ring.without(i)
    if mode == "delete":
        kept = [e[:i] + e[i + 1 :] for e in I._gens if e[i] == 0]
    elif mode == "contract":
        kept = [e[:i] + e[i + 1 :] for e in I._gens]
    else:
        raise DomainError(f"minor mode must be 'delete' or 'contract', not {mode!r}")
    return MonomialIdeal._from_minimal(ring, _minimal(kept))


# -- text syntax -----------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_.]*)|(?P<int>\d+)|(?P<op>[()*^,]))"
)


class _Lexer:
    def __init__(self, text: str, line: int = 1, col: int = 1):
        self.text = text
        self.pos = 0
        self.line0 = line
        self.col0 = col
        self.tokens = []
        while True:
            m = _TOKEN_RE.match(text, self.pos)
            if not m:
                rest = text[self.pos :]
                if rest.strip():
                    off = self.pos + len(rest) - len(rest.lstrip())
                    raise ParseError(f"unexpected character {text[off]!r}", *self.where(off))
                break
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), m.start(kind)))
            self.pos = m.end()
        self.tokens.append(("end", "", len(text)))
        self.i = 0

    def where(self, offset: int):
        before = self.text[:offset]
        line = before.count("\n")
        if line:
            return self.line0 + line, offset - before.rfind("\n")
        return self.line0, self.col0 + offset

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None, value=None):
        tok = self.tokens[self.i]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise ParseError(f"expected {want!r}, found {got!r}", *self.where(tok[2]))
        self.i += 1
        return tok


def _parse_monomial_tokens(lx: _Lexer, ring: VariableSet | None, order: list):
    """Returns {name: exponent}; names are appended to ``order`` on first sight."""
    tok = lx.peek()
    if tok[0] == "int":
        lx.take()
        if tok[1] != "1":
            raise ParseError(f"only the constant 1 is a monomial, not {tok[1]}", *lx.where(tok[2]))
        return {}
    exps = {}
    while True:
        _, name, off = lx.take("name")
        if ring is not None and name not in ring:
            raise ParseError(f"unknown variable {name!r}", *lx.where(off))
        if ring is None and name not in order:
            order.append(name)
        k = 1
        if lx.peek()[1] == "^":
            lx.take()
            _, digits, _ = lx.take("int")
            k = int(digits)
        exps[name] = exps.get(name, 0) + k
        if lx.peek()[1] != "*":
            return exps
        lx.take()


def _exps_from_map(ring: VariableSet, mp: dict) -> Exps:
    e = [0] * len(ring)
    for k, v in mp.items():
        e[ring.index(k)] = v
    return _check_exps(tuple(e))


def parse_monomial(text: str, ring: VariableSet) -> Monomial:
    """Parse ``x^2*y*z^3`` or ``1``."""
    lx = _Lexer(text)
    mp = _parse_monomial_tokens(lx, ring, [])
    lx.take("end")
    return Monomial(ring, _exps_from_map(ring, mp))


def parse_ideal(text: str, ring: VariableSet | None = None, line: int = 1, col: int = 1) -> MonomialIdeal:
    """Parse ``(x^2*y, z)``, ``(0)`` or ``(1)``.

    Without ``ring`` the variables are taken in order of first appearance.
    """
    lx = _Lexer(text, line, col)
    order: list = []
    lx.take(value="(")
    maps = []
    tok = lx.peek()
    if tok[0] == "int" and tok[1] == "0":
        lx.take()
    else:
        while True:
            maps.append(_parse_monomial_tokens(lx, ring, order))
            if lx.peek()[1] != ",":
                break
            lx.take()
    lx.take(value=")")
    lx.take("end")
    if ring is None:
        ring = VariableSet(tuple(order))
    return MonomialIdeal(ring, [_exps_from_map(ring, mp) for mp in maps])

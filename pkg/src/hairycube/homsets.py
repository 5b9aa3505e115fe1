"""Hom-set enumeration over structured spaces, and the term clone on S.

Two independent routes produce the same hom-sets and are kept separate on
purpose: `enumerate_homs_bruteforce` searches all assignments carrier -> S
against the relational (and partial-operation) constraints, while
`clone_closure` generates term tables from projections and constants.
Tests compare the two.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence, Union

from .core import (
    ELEMENTS,
    Element,
    TritTable,
    all_tuples,
    tuple_index,
    tuple_join,
    tuple_meet,
    tuple_bar,
    ZERO,
)
from .posets import FiniteLattice
from .relations import R1, R2, R3, BinaryRelation, PartialOp

DEFAULT_CARRIER_CAP = 12
DEFAULT_CLONE_ARITY_CAP = 3


class CapExceededError(ValueError):
    """Raised when a requested enumeration exceeds the configured cap."""

    def __init__(self, message: str, required_candidates: int | None = None):
        super().__init__(message)
        self.required_candidates = required_candidates


@dataclass(frozen=True)
class StructuredSpace:
    """Finite subset of S^arity carrying relations and partial operations.

    Relations and partial operations are interpreted componentwise.  When a
    partial operation is listed, the carrier must be closed under it
    wherever the componentwise domain condition holds.
    """

    arity: int
    carrier: tuple[tuple[Element, ...], ...]
    relations: tuple[BinaryRelation, ...] = ()
    partial_ops: tuple[PartialOp, ...] = ()

    def __post_init__(self) -> None:
        if not self.carrier:
            raise ValueError("carrier must be nonempty")
        if list(self.carrier) != sorted(set(self.carrier)):
            raise ValueError("carrier must be canonically sorted and duplicate-free")
        for point in self.carrier:
            if len(point) != self.arity:
                raise ValueError(f"point {point} does not have width {self.arity}")
        for op in self.partial_ops:
            for u in self.carrier:
                for v in self.carrier:
                    if all(op.defined(a, b) for a, b in zip(u, v)):
                        w = tuple(op(a, b) for a, b in zip(u, v))
                        if w not in self._point_set():
                            raise ValueError(
                                f"carrier is not closed under {op.name} at {u}, {v}"
                            )

    @lru_cache(maxsize=None)
    def _point_set(self) -> frozenset[tuple[Element, ...]]:
        return frozenset(self.carrier)

    @lru_cache(maxsize=None)
    def _point_index(self):
        return {p: i for i, p in enumerate(self.carrier)}

    def index(self, point: tuple[Element, ...]) -> int:
        return self._point_index()[point]

    @property
    def size(self) -> int:
        return len(self.carrier)

    def is_full_power(self) -> bool:
        return self.carrier == all_tuples(self.arity)

    @classmethod
    def power(
        cls,
        n: int,
        relations: tuple[BinaryRelation, ...] = (R1, R2, R3),
        partial_ops: tuple[PartialOp, ...] = (),
    ) -> "StructuredSpace":
        return cls(n, all_tuples(n), tuple(relations), tuple(partial_ops))

    @classmethod
    def from_points(
        cls,
        points: Iterable[tuple[Element, ...]],
        relations: tuple[BinaryRelation, ...] = (),
        partial_ops: tuple[PartialOp, ...] = (),
    ) -> "StructuredSpace":
        points = sorted(set(tuple(p) for p in points))
        if not points:
            raise ValueError("carrier must be nonempty")
        return cls(len(points[0]), tuple(points), tuple(relations), tuple(partial_ops))


MapLike = Union[TritTable, Sequence[Element]]


def _as_assignment(f: MapLike, space: StructuredSpace) -> tuple[Element, ...]:
    if isinstance(f, TritTable):
        if not space.is_full_power() or f.arity != space.arity:
            raise ValueError("table maps do not match this carrier")
        return f.entries
    values = tuple(f)
    if len(values) != space.size:
        raise ValueError(
            f"assignment has {len(values)} values for a carrier of {space.size}"
        )
    return values


def preserves_relation(f: MapLike, rel: BinaryRelation, space: StructuredSpace) -> bool:
    """Does f carry componentwise rel-related carrier points to rel-related values?"""
    values = _as_assignment(f, space)
    for i, u in enumerate(space.carrier):
        for j, v in enumerate(space.carrier):
            if all(rel.contains(a, b) for a, b in zip(u, v)):
                if not rel.contains(values[i], values[j]):
                    return False
    return True


def preserves_partial_op(f: MapLike, op: PartialOp, space: StructuredSpace) -> bool:
    """Does f commute with op wherever the componentwise domain holds?

    Requires the componentwise result to lie in the carrier, the image pair
    to lie in the domain, and the values to agree.
    """
    values = _as_assignment(f, space)
    points = space._point_set()
    for i, u in enumerate(space.carrier):
        for j, v in enumerate(space.carrier):
            if not all(op.defined(a, b) for a, b in zip(u, v)):
                continue
            w = tuple(op(a, b) for a, b in zip(u, v))
            if w not in points:
                return False
            if not op.defined(values[i], values[j]):
                return False
            if op(values[i], values[j]) != values[space.index(w)]:
                return False
    return True


@dataclass(frozen=True)
class HomSet:
    """Canonically ordered morphisms of a structured space into S."""

    source: StructuredSpace
    maps: tuple[tuple[Element, ...], ...]

    def __len__(self) -> int:
        return len(self.maps)

    def __iter__(self) -> Iterator[tuple[Element, ...]]:
        return iter(self.maps)

    def __contains__(self, f: MapLike) -> bool:
        try:
            return _as_assignment(f, self.source) in set(self.maps)
        except ValueError:
            return False

    def tables(self) -> tuple[TritTable, ...]:
        if not self.source.is_full_power():
            raise ValueError("maps of a proper carrier are not n-ary tables")
        return tuple(TritTable(self.source.arity, m) for m in self.maps)

    def lattice(self) -> FiniteLattice:
        return FiniteLattice.from_leq(
            self.maps,
            lambda x, y: all(a <= b for a, b in zip(x, y)),
            validate=False,
        )


def _compile_checks(space: StructuredSpace):
    """Constraint tuples grouped by the largest carrier index they mention."""
    m = space.size
    checks: list[list[tuple]] = [[] for _ in range(m)]
    for rel in space.relations:
        for i, u in enumerate(space.carrier):
            for j, v in enumerate(space.carrier):
                if all(rel.contains(a, b) for a, b in zip(u, v)):
                    checks[max(i, j)].append(("r", i, j, rel.mask))
    for op in space.partial_ops:
        dom = op.domain
        for i, u in enumerate(space.carrier):
            for j, v in enumerate(space.carrier):
                if all(dom.contains(a, b) for a, b in zip(u, v)):
                    w = tuple(op(a, b) for a, b in zip(u, v))
                    k = space.index(w)
                    checks[max(i, j, k)].append(("p", i, j, k, dom.mask, op.values))
    return checks


def _search_assignments(m: int, checks) -> Iterator[tuple[Element, ...]]:
    """Depth-first search over all assignments, in canonical (lex) order."""
    assign: list[Element] = [ZERO] * m

    def ok(t: int) -> bool:
        for c in checks[t]:
            if c[0] == "r":
                _, i, j, mask = c
                if not mask >> (3 * assign[i] + assign[j]) & 1:
                    return False
            else:
                _, i, j, k, dmask, values = c
                idx = 3 * assign[i] + assign[j]
                if not dmask >> idx & 1:
                    return False
                if values[idx] != assign[k]:
                    return False
        return True

    def rec(t: int) -> Iterator[tuple[Element, ...]]:
        if t == m:
            yield tuple(assign)
            return
        for v in ELEMENTS:
            assign[t] = v
            if ok(t):
                yield from rec(t + 1)

    yield from rec(0)


def enumerate_homs_bruteforce(
    space: StructuredSpace, carrier_cap: int = DEFAULT_CARRIER_CAP
) -> HomSet:
    """Exhaustive search for all structure-preserving maps carrier -> S.

    The search walks the full 3^|carrier| assignment tree in canonical
    order, abandoning a branch as soon as a constraint on the assigned
    prefix fails.
    """
    if space.size > carrier_cap:
        raise CapExceededError(
            f"carrier has {space.size} points (cap {carrier_cap}); "
            f"enumeration would require 3^{space.size} = {3 ** space.size} candidates",
            required_candidates=3 ** space.size,
        )
    checks = _compile_checks(space)
    maps = tuple(_search_assignments(space.size, checks))
    return HomSet(space, maps)


@lru_cache(maxsize=None)
def _clone_entries(n: int) -> tuple[tuple[Element, ...], ...]:
    gens = [TritTable.projection(n, i).entries for i in range(1, n + 1)]
    gens += [TritTable.constant(n, c).entries for c in ELEMENTS]
    seen = set()
    elems: list[tuple[Element, ...]] = []
    for g in gens:
        if g not in seen:
            seen.add(g)
            elems.append(g)
    i = 0
    while i < len(elems):
        a = elems[i]
        fresh = [tuple_bar(a)]
        for j in range(i + 1):
            b = elems[j]
            fresh.append(tuple_meet(a, b))
            fresh.append(tuple_join(a, b))
        for t in fresh:
            if t not in seen:
                seen.add(t)
                elems.append(t)
        i += 1
    return tuple(sorted(elems))


def clone_closure(n: int, arity_cap: int = DEFAULT_CLONE_ARITY_CAP) -> HomSet:
    """Least set of n-ary tables containing projections and constants and
    closed under pointwise meet, join and bar."""
    if n > arity_cap:
        raise CapExceededError(
            f"clone closure requested at arity {n} exceeds the cap {arity_cap}"
        )
    if n < 0:
        raise ValueError("arity must be nonnegative")
    return HomSet(StructuredSpace.power(n), _clone_entries(n))


def slice_first(table: TritTable, a: Element) -> TritTable:
    """Fix the first argument of an n-ary table, leaving an (n-1)-ary one."""
    if table.arity < 1:
        raise ValueError("slicing needs at least one argument position")
    block = 3 ** (table.arity - 1)
    lo = int(a) * block
    return TritTable(table.arity - 1, table.entries[lo : lo + block])


def assemble(s0: TritTable, sh: TritTable, s1: TritTable) -> TritTable:
    """Inverse of slicing: glue three (n-1)-ary tables along the first argument."""
    if not s0.arity == sh.arity == s1.arity:
        raise ValueError("slices must share an arity")
    return TritTable(s0.arity + 1, s0.entries + sh.entries + s1.entries)


def point_slice(table: TritTable, x: tuple[Element, ...]) -> TritTable:
    """The unary map a |-> table(a, x) for a fixed tail x."""
    if len(x) != table.arity - 1:
        raise ValueError(f"tail must have {table.arity - 1} coordinates")
    tail = tuple_index(x)
    block = 3 ** (table.arity - 1)
    return TritTable(1, tuple(table.entries[int(a) * block + tail] for a in ELEMENTS))


@lru_cache(maxsize=None)
def unary_morphisms() -> tuple[TritTable, ...]:
    return clone_closure(1).tables()


def check_construct_conditions(table: TritTable, member_of: HomSet) -> bool:
    """Necessary conditions for membership in the hom-set one arity up.

    The three slices must belong to `member_of`, satisfy
    s0 v (s1 ^ h) = sh and s0 ^ h <= s1, and every point slice must be a
    unary morphism.
    """
    if table.arity < 2:
        raise ValueError("construct conditions apply to arity >= 2")
    if member_of.source.arity != table.arity - 1:
        raise ValueError("member_of must hold tables one arity down")
    s0, sh, s1 = (slice_first(table, a) for a in ELEMENTS)
    members = set(member_of.maps)
    if not (s0.entries in members and sh.entries in members and s1.entries in members):
        return False
    if s0.join(s1.meet_h()) != sh:
        return False
    if not s0.meet_h().leq(s1):
        return False
    unary = set(unary_morphisms())
    for x in all_tuples(table.arity - 1):
        if point_slice(table, x) not in unary:
            return False
    return True

"""Join-irreducible geometry of the hom-set lattices: cubes with hairs.

The join-irreducible members of the n-ary hom-set lattice form a poset
with a 2^n-cube base (the members below the constant h) and one extra
incomparable element, a hair, covering each base vertex.  Every member is
a meet of barred and unbarred projections, optionally cut down by h; the
exponent vector of that polynomial is the cube coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .core import ELEMENTS, Element, H, TritTable
from .homsets import assemble, clone_closure, slice_first
from .posets import FiniteLattice, FinitePoset


def join_irreducibles(lattice: FiniteLattice) -> FinitePoset:
    """Induced poset of elements with exactly one lower cover."""
    return lattice.induced(lattice.join_irreducible_indices())


@dataclass(frozen=True, order=True)
class JIElement:
    """Join-irreducible hom-set member with its polynomial descriptor.

    epsilon ranges over {0,1}^n (1 marks a barred projection factor) and
    meet_h tells whether the polynomial is cut down by h (base) or not
    (hair).
    """

    table: TritTable
    epsilon: tuple[int, ...]
    meet_h: bool

    @property
    def is_base(self) -> bool:
        return self.meet_h

    @property
    def label(self) -> str:
        return polynomial_label(self.epsilon, self.meet_h)


def polynomial_label(epsilon: tuple[int, ...], meet_h: bool) -> str:
    factors = [f"~p{i + 1}" if e else f"p{i + 1}" for i, e in enumerate(epsilon)]
    if meet_h:
        factors.append("h")
    return "∧".join(factors)


def eval_polynomial(epsilon: tuple[int, ...], meet_h: bool, n: int) -> TritTable:
    """Meet of (barred) projections selected by epsilon, optionally with h."""
    if len(epsilon) != n:
        raise ValueError(f"epsilon must have {n} coordinates")
    table = TritTable.constant(n, Element.ONE)
    for i, e in enumerate(epsilon):
        p = TritTable.projection(n, i + 1)
        table = table.meet(p.bar() if e else p)
    if meet_h:
        table = table.meet_h()
    return table


def eta(n: int, table: TritTable) -> tuple[int, ...]:
    """Cube coordinate of a base join-irreducible (order isomorphism onto 2^n)."""
    if table.arity != n:
        raise ValueError(f"table has arity {table.arity}, not {n}")
    if not table.leq(TritTable.constant(n, H)):
        raise ValueError("eta is only defined below h")
    if n == 1:
        if table == TritTable.from_string("0hh"):
            return (0,)
        if table == TritTable.from_string("hhh"):
            return (1,)
        raise ValueError(f"{table} is not a base join-irreducible")
    s0, sh, s1 = (slice_first(table, a) for a in ELEMENTS)
    if s0 == sh == s1:
        return (1,) + eta(n - 1, sh)
    if s0 == TritTable.constant(n - 1, Element.ZERO) and sh == s1:
        return (0,) + eta(n - 1, sh)
    raise ValueError(f"{table} is not a base join-irreducible")


def polynomial_form(table: TritTable, n: int) -> tuple[tuple[int, ...], bool]:
    """Descriptor (epsilon, meet_h) of a join-irreducible table."""
    meet_h = table.leq(TritTable.constant(n, H))
    return eta(n, table.meet_h()), meet_h


@lru_cache(maxsize=None)
def hairy_cube_recursive(n: int) -> FinitePoset:
    """The join-irreducible poset built by the two slice constructors.

    Dimension 1 is the explicit four-element base case; dimension n glues,
    for each join-irreducible psi one arity down, the tables
    (0, psi^h, psi) and (psi, psi, psi^h).
    """
    if n < 1:
        raise ValueError("dimension must be at least 1")
    if n == 1:
        tables = [TritTable.from_string(s) for s in ("0hh", "hhh", "0h1", "11h")]
    else:
        tables = []
        for prev in hairy_cube_recursive(n - 1).elements:
            psi = prev.table
            zero = TritTable.constant(n - 1, Element.ZERO)
            tables.append(assemble(zero, psi.meet_h(), psi))
            tables.append(assemble(psi, psi, psi.meet_h()))
    elements = sorted(
        JIElement(t, *polynomial_form(t, n)) for t in tables
    )
    return FinitePoset.from_leq(
        elements, lambda x, y: x.table.leq(y.table), validate=False
    )


def _element_table(x) -> TritTable:
    return x.table if isinstance(x, JIElement) else x


@dataclass(frozen=True)
class HairyCubeReport:
    """Clause-by-clause outcome of the hairy-cube shape check."""

    dimension: int
    clauses: tuple[tuple[str, bool, str], ...]

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.clauses)

    def failed_clauses(self) -> tuple[str, ...]:
        return tuple(name for name, ok, _ in self.clauses if not ok)


def _cube_poset(n: int) -> FinitePoset:
    verts = sorted(product((0, 1), repeat=n))
    return FinitePoset.from_leq(
        verts, lambda x, y: all(a <= b for a, b in zip(x, y)), validate=False
    )


def verify_hairy_cube(poset: FinitePoset, n: int) -> HairyCubeReport:
    """Check the four shape clauses against an arbitrary poset of tables."""
    tables = [_element_table(e) for e in poset.elements]
    h_const = TritTable.constant(n, H)
    base_idx = [i for i, t in enumerate(tables) if t.leq(h_const)]
    hair_idx = [i for i, t in enumerate(tables) if not t.leq(h_const)]
    clauses = []

    base = poset.induced(base_idx)
    iso = base.isomorphism_to(_cube_poset(n)) if base.n == 2 ** n else None
    clauses.append(
        (
            "base-is-cube",
            iso is not None,
            f"|base| = {base.n}, expected {2 ** n}"
            + ("" if iso is None else ", order-isomorphic to the cube"),
        )
    )

    bad_pairs = [
        (i, j)
        for i, j in combinations(hair_idx, 2)
        if poset.leq_by_index(i, j) or poset.leq_by_index(j, i)
    ]
    clauses.append(
        (
            "hairs-incomparable",
            not bad_pairs,
            f"{len(bad_pairs)} comparable non-base pairs",
        )
    )

    ok_up = True
    detail_up = "each base vertex has one non-base cover equal to its hair"
    for i in base_idx:
        ups = [j for j in poset.upper_cover_indices(i) if j in hair_idx]
        if len(ups) != 1 or tables[ups[0]].meet_h() != tables[i]:
            ok_up = False
            detail_up = f"base element {tables[i]} has non-base covers {ups}"
            break
    clauses.append(("unique-hair-cover", ok_up, detail_up))

    ok_down = True
    detail_down = "each hair covers exactly its meet with h"
    for j in hair_idx:
        downs = poset.lower_cover_indices(j)
        if len(downs) != 1 or tables[downs[0]] != tables[j].meet_h():
            ok_down = False
            detail_down = f"hair {tables[j]} has lower covers {downs}"
            break
    clauses.append(("hair-covers-own-base", ok_down, detail_down))

    return HairyCubeReport(n, tuple(clauses))


def ji_meet_formula_check(n: int) -> bool:
    """For distinct join-irreducibles, meets factor through the base:
    x ^ y = (x ^ h) ^ (y ^ h), so the meet lands below h.

    Distinctness matters: a hair meets itself to itself, above h.
    """
    if n > 3:
        raise ValueError("checked up to dimension 3")
    cube = hairy_cube_recursive(n)
    tables = [e.table for e in cube.elements]
    h_const = TritTable.constant(n, H)
    for x, y in combinations(tables, 2):
        m = x.meet(y)
        if m != x.meet_h().meet(y.meet_h()):
            return False
        if not m.leq(h_const):
            return False
    return True


def downset_topology(poset: FinitePoset) -> tuple[frozenset, ...]:
    """All downsets, i.e. the open sets of the associated finite topology."""
    return poset.downsets()


def open_set_order(opens, elements=None) -> FinitePoset:
    """Specialisation order of a finite T0 topology: x <= y iff every open
    set containing y contains x."""
    opens = [frozenset(o) for o in opens]
    points = set().union(*opens) if opens else set()
    if elements is None:
        elements = sorted(points)
    elements = tuple(elements)
    if set(elements) != points:
        raise ValueError("element list does not match the union of the opens")

    def leq(x, y):
        return all(x in o for o in opens if y in o)

    for x, y in combinations(elements, 2):
        if leq(x, y) and leq(y, x):
            raise ValueError(f"topology is not T0: {x} and {y} are inseparable")
    return FinitePoset.from_leq(elements, leq, validate=False)


@dataclass(frozen=True)
class PartiallyStoneSpaceFinite:
    """Finite candidate dual space: a poset, a marked base subset and the
    downset topology."""

    poset: FinitePoset
    base: frozenset
    opens: tuple[frozenset, ...]

    @classmethod
    def from_poset(cls, poset: FinitePoset, base) -> "PartiallyStoneSpaceFinite":
        base = frozenset(base)
        unknown = base - set(poset.elements)
        if unknown:
            raise ValueError(f"base points {unknown} are not in the poset")
        return cls(poset, base, downset_topology(poset))

    @classmethod
    def of_dimension(cls, n: int) -> "PartiallyStoneSpaceFinite":
        cube = hairy_cube_recursive(n)
        return cls.from_poset(
            cube, frozenset(e for e in cube.elements if e.is_base)
        )


@dataclass(frozen=True)
class PssResult:
    ok: bool
    failed_clause: str | None
    mapping: dict | None


def pss_homeomorphism(candidate: PartiallyStoneSpaceFinite, n: int) -> PssResult:
    """Try to exhibit the candidate as the dimension-n hairy cube.

    Hypotheses checked in order: the base is order-isomorphic to the
    2^n cube, the non-base points are pairwise incomparable, every base
    point has a unique non-base cover, and every non-base point covers
    exactly one base point.  On success the rank-respecting base match is
    extended along the cover bijection and verified to be a full order
    isomorphism (downset topologies then correspond automatically, and
    this is checked as well).
    """
    poset = candidate.poset
    base_idx = [i for i, e in enumerate(poset.elements) if e in candidate.base]
    hair_idx = [i for i in range(poset.n) if i not in set(base_idx)]

    target = hairy_cube_recursive(n)
    target_base_idx = [i for i, e in enumerate(target.elements) if e.is_base]
    target_base = target.induced(target_base_idx)

    base_poset = poset.induced(base_idx)
    base_iso = (
        base_poset.isomorphism_to(target_base) if base_poset.n == 2 ** n else None
    )
    if base_iso is None:
        return PssResult(False, "base-is-cube", None)

    for i, j in combinations(hair_idx, 2):
        if poset.leq_by_index(i, j) or poset.leq_by_index(j, i):
            return PssResult(False, "hairs-incomparable", None)

    hair_over: dict[int, int] = {}
    for i in base_idx:
        ups = [j for j in poset.upper_cover_indices(i) if j in set(hair_idx)]
        if len(ups) != 1:
            return PssResult(False, "unique-hair-cover", None)
        hair_over[i] = ups[0]

    for j in hair_idx:
        downs = [i for i in poset.lower_cover_indices(j) if i in set(base_idx)]
        if len(downs) != 1 or poset.lower_cover_indices(j) != tuple(downs):
            return PssResult(False, "hair-covers-one-base", None)

    target_hair_over = {}
    for e in target.elements:
        if e.is_base:
            i = target.index(e)
            ups = [
                j
                for j in target.upper_cover_indices(i)
                if not target.elements[j].is_base
            ]
            target_hair_over[e] = target.elements[ups[0]]

    mapping = dict(base_iso)
    for i, j in hair_over.items():
        mapping[poset.elements[j]] = target_hair_over[base_iso[poset.elements[i]]]

    for x in poset.elements:
        for y in poset.elements:
            if poset.leq(x, y) != target.leq(mapping[x], mapping[y]):
                return PssResult(False, "order-isomorphism", None)

    image_opens = {frozenset(mapping[x] for x in o) for o in candidate.opens}
    if image_opens != set(downset_topology(target)):
        return PssResult(False, "open-sets-correspond", None)
    return PssResult(True, None, mapping)


def chi_lattice(n: int) -> FiniteLattice:
    """The n-ary hom-set as a lattice of tables under the pointwise order."""
    return FiniteLattice.from_leq(
        clone_closure(n).tables(), lambda x, y: x.leq(y), validate=False
    )


def extracted_hairy_cube(n: int) -> FinitePoset:
    return join_irreducibles(chi_lattice(n))

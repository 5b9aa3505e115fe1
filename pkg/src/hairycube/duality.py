"""Dual structures on S and the finite checks that compare them.

The four structure variants carry the generating relations and, for the
strong ones, the algebraic partial operations lambda1/lambda2.  The
functions here mechanise the finite claims about them: algebraicity,
witness maps separating the relations, failure of term-for-term
composition (FTC), relation entailment by lambda1, evaluation maps being
isomorphisms, and persistence of the hom-set geometry across variants.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import (
    ELEMENTS,
    Element,
    H,
    ONE,
    TritTable,
    ZERO,
    all_tuples,
)
from .cube import hairy_cube_recursive, join_irreducibles
from .homsets import (
    CapExceededError,
    HomSet,
    StructuredSpace,
    clone_closure,
    enumerate_homs_bruteforce,
    preserves_relation,
)
from .posets import FiniteLattice
from .relations import (
    R1,
    R2,
    R3,
    BinaryRelation,
    FULL,
    PartialOp,
    enumerate_subalgebras,
    canonical_name,
    is_subuniverse,
)


def _graph(triples):
    return tuple(
        tuple(Element(v) for v in t) for t in triples
    )


LAMBDA1 = PartialOp.from_graph(
    "λ1",
    R1,
    _graph(
        [
            (0, 0, 0),
            (1, 1, 1),
            (2, 2, 2),
            (0, 1, 1),
            (0, 2, 1),
            (1, 0, 0),
            (1, 2, 1),
            (2, 1, 2),
        ]
    ),
)

LAMBDA2 = PartialOp.from_graph(
    "λ2",
    R1.inverse(),
    _graph(
        [
            (0, 0, 0),
            (1, 1, 1),
            (2, 2, 2),
            (0, 1, 0),
            (1, 0, 1),
            (2, 0, 1),
            (1, 2, 2),
            (2, 1, 1),
        ]
    ),
)


def lambda_op(i: int) -> PartialOp:
    try:
        return (LAMBDA1, LAMBDA2)[i - 1]
    except IndexError:
        raise ValueError(f"lambda index must be 1 or 2, got {i}") from None


def _projection_op(i: int) -> PartialOp:
    return PartialOp.from_graph(
        f"pi{i}", FULL, ((a, b, (a, b)[i - 1]) for a, b in FULL.pairs())
    )


PI1 = _projection_op(1)
PI2 = _projection_op(2)


@dataclass(frozen=True)
class StructureVariant:
    """A choice of relations, partial operations and total operations on S."""

    name: str
    relations: tuple[BinaryRelation, ...]
    partial_ops: tuple[PartialOp, ...] = ()
    total_ops: tuple[PartialOp, ...] = ()

    def power_space(self, n: int) -> StructuredSpace:
        return StructuredSpace.power(
            n, self.relations, self.partial_ops + self.total_ops
        )


VARIANTS: dict[str, StructureVariant] = {
    v.name: v
    for v in (
        StructureVariant("relational", (R1, R2, R3)),
        StructureVariant("strong", (R1, R2, R3), (LAMBDA1, LAMBDA2), (PI1, PI2)),
        StructureVariant("strong-min", (R1, R2, R3), (LAMBDA1,)),
        StructureVariant("optimal-strong", (R2,), (LAMBDA1,)),
    )
}


def variant(name: str) -> StructureVariant:
    try:
        return VARIANTS[name]
    except KeyError:
        raise ValueError(
            f"unknown variant {name!r}; choose from {sorted(VARIANTS)}"
        ) from None


def verify_algebraic(op: PartialOp) -> bool:
    """A partial operation is algebraic when its graph is a subuniverse of S^3."""
    return is_subuniverse(op.graph(), 3)


def compose_lambda_swap() -> bool:
    """lambda1 with swapped arguments is exactly lambda2."""
    for a, b in LAMBDA2.domain.pairs():
        if not LAMBDA1.defined(b, a) or LAMBDA1(b, a) != LAMBDA2(a, b):
            return False
    return all(not LAMBDA1.defined(b, a) for a, b in FULL.pairs()
               if not LAMBDA2.defined(a, b))


def homs_for_variant(n: int, variant_name: str, carrier_cap: int = 12) -> HomSet:
    return enumerate_homs_bruteforce(
        variant(variant_name).power_space(n), carrier_cap=carrier_cap
    )


def algebra_homs(carrier: tuple[tuple[Element, ...], ...]) -> tuple[tuple[Element, ...], ...]:
    """All maps from a subalgebra carrier to S preserving componentwise meet
    and join and fixing the constants.  Exhaustive depth-first search."""
    carrier = tuple(sorted(set(tuple(p) for p in carrier)))
    if not carrier:
        raise ValueError("carrier must be nonempty")
    k = len(carrier[0])
    index = {p: i for i, p in enumerate(carrier)}
    m = len(carrier)

    fixed: dict[int, Element] = {}
    for c in ELEMENTS:
        diag = (c,) * k
        if diag not in index:
            raise ValueError("carrier does not contain the constant tuples")
        fixed[index[diag]] = c

    equations: list[list[tuple]] = [[] for _ in range(m)]
    for i, u in enumerate(carrier):
        for j, v in enumerate(carrier):
            w_meet = tuple(map(min, u, v))
            w_join = tuple(map(max, u, v))
            if w_meet not in index or w_join not in index:
                raise ValueError("carrier is not closed under meet and join")
            km = index[w_meet]
            kj = index[w_join]
            equations[max(i, j, km)].append(("m", i, j, km))
            equations[max(i, j, kj)].append(("j", i, j, kj))

    assign: list[Element] = [ZERO] * m
    out: list[tuple[Element, ...]] = []

    def ok(t: int) -> bool:
        if t in fixed and assign[t] != fixed[t]:
            return False
        for tag, i, j, kk in equations[t]:
            a, b = assign[i], assign[j]
            want = a if ((a <= b) == (tag == "m")) else b
            if assign[kk] != want:
                return False
        return True

    def rec(t: int) -> None:
        if t == m:
            out.append(tuple(assign))
            return
        for v in ELEMENTS:
            assign[t] = v
            if ok(t):
                rec(t + 1)

    rec(0)
    return tuple(out)


def total_homs(n: int) -> tuple[TritTable, ...]:
    """Algebra homomorphisms S^n -> S; expected to be the projections."""
    if n > 2:
        raise CapExceededError(f"total hom enumeration capped at arity 2, got {n}")
    return tuple(TritTable(n, f) for f in algebra_homs(all_tuples(n)))


@dataclass(frozen=True)
class ClassifiedHom:
    values: tuple[Element, ...]
    tags: tuple[str, ...]


@dataclass(frozen=True)
class ClassificationReport:
    """Per subalgebra of S^2: its homs into S, each tagged by the known
    operations restricting to it."""

    entries: tuple[tuple[str, tuple[ClassifiedHom, ...]], ...]

    @property
    def unclassified(self) -> int:
        return sum(
            1 for _, homs in self.entries for hom in homs if not hom.tags
        )

    @property
    def passed(self) -> bool:
        return self.unclassified == 0


_TAGGED_OPS = (("pi1", PI1), ("pi2", PI2), ("λ1", LAMBDA1), ("λ2", LAMBDA2))


def classify_partial_homs() -> ClassificationReport:
    entries = []
    for rel in enumerate_subalgebras().elements:
        carrier = tuple(rel.pairs())
        homs = []
        for values in algebra_homs(carrier):
            tags = []
            for tag, op in _TAGGED_OPS:
                if not rel.issubset(op.domain):
                    continue
                if all(op(a, b) == values[i] for i, (a, b) in enumerate(carrier)):
                    tags.append(tag)
            homs.append(ClassifiedHom(values, tuple(tags)))
        entries.append((canonical_name(rel), tuple(homs)))
    return ClassificationReport(tuple(entries))


@dataclass(frozen=True)
class Witness:
    description: str
    preserved: tuple[str, ...]
    violated: str
    ok: bool


def optimality_witnesses() -> tuple[Witness, ...]:
    """Dropping any one of r1, r2, r3 admits a new compatible map."""
    names = {1: "r1", 2: "r2", 3: "r3"}
    results = []

    def unary_case(table_text: str, kept: tuple[int, int], dropped: int):
        table = TritTable.from_string(table_text)
        space = StructuredSpace.power(1)
        keeps = all(
            preserves_relation(table, (R1, R2, R3)[i - 1], space) for i in kept
        )
        breaks = not preserves_relation(table, (R1, R2, R3)[dropped - 1], space)
        results.append(
            Witness(
                f"unary map {table_text}",
                tuple(names[i] for i in kept),
                names[dropped],
                keeps and breaks,
            )
        )

    unary_case("1h1", (1, 2), 3)
    unary_case("00h", (1, 3), 2)

    points = (
        (ZERO, ONE),
        (H, ZERO),
    )
    space = StructuredSpace.from_points(points)
    alpha = {(H, ZERO): ONE, (ZERO, ONE): ZERO}
    values = tuple(alpha[p] for p in space.carrier)
    keeps = preserves_relation(values, R2, space) and preserves_relation(
        values, R3, space
    )
    breaks = not preserves_relation(values, R1, space)
    results.append(
        Witness(
            "α on {(h,0),(0,1)} with α(h,0)=1, α(0,1)=0",
            ("r2", "r3"),
            "r1",
            keeps and breaks,
        )
    )
    return tuple(results)


@dataclass(frozen=True)
class FtcResult:
    separated: bool
    pair: tuple[TritTable, TritTable] | None
    restrictions: tuple[tuple[Element, ...], ...]


def ftc_check(points, y, n: int) -> FtcResult:
    """Does some pair of n-ary morphisms agree on the given points while
    differing at y?  The restriction list is the certificate either way."""
    if n > 2:
        raise CapExceededError(f"morphism enumeration capped at arity 2, got {n}")

    def normalize(p):
        if isinstance(p, Element):
            return (p,)
        return tuple(p)

    pts = sorted(set(normalize(p) for p in points))
    y = normalize(y)
    if any(len(p) != n for p in pts) or len(y) != n:
        raise ValueError(f"points must lie in S^{n}")
    if y in pts:
        raise ValueError("the separation point must lie outside the subset")

    morphisms = clone_closure(n).tables()
    restrictions = tuple(tuple(t(*p) for p in pts) for t in morphisms)
    for i, j in combinations(range(len(morphisms)), 2):
        if restrictions[i] == restrictions[j] and morphisms[i](*y) != morphisms[j](*y):
            return FtcResult(True, (morphisms[i], morphisms[j]), restrictions)
    return FtcResult(False, None, restrictions)


@dataclass(frozen=True)
class EntailmentReport:
    """Exhaustive check that every lambda1-preserving map on a lambda1-closed
    substructure also preserves r1 and r3."""

    max_power: int
    substructures: int
    maps_checked: int
    violations: tuple[tuple, ...]

    @property
    def passed(self) -> bool:
        return not self.violations


def _lambda1_closed_subsets(n: int):
    tuples = all_tuples(n)

    for mask in range(1, 1 << len(tuples)):
        subset = [t for i, t in enumerate(tuples) if mask >> i & 1]
        closed = True
        for u in subset:
            for v in subset:
                if all(LAMBDA1.defined(a, b) for a, b in zip(u, v)):
                    w = tuple(LAMBDA1(a, b) for a, b in zip(u, v))
                    if w not in set(subset):
                        closed = False
                        break
            if not closed:
                break
        if closed:
            yield tuple(subset)


def entailment_lambda1(max_power: int = 2, carrier_cap: int = 12) -> EntailmentReport:
    if max_power > 2:
        raise CapExceededError(
            f"entailment check capped at power 2, got {max_power}"
        )
    substructures = 0
    maps_checked = 0
    violations = []
    for n in range(1, max_power + 1):
        for subset in _lambda1_closed_subsets(n):
            substructures += 1
            space = StructuredSpace.from_points(subset, (), (LAMBDA1,))
            homs = enumerate_homs_bruteforce(space, carrier_cap=carrier_cap)
            for values in homs:
                maps_checked += 1
                for rel, rel_name in ((R1, "r1"), (R3, "r3")):
                    if not preserves_relation(values, rel, space):
                        violations.append((n, subset, values, rel_name))
    return EntailmentReport(max_power, substructures, maps_checked, tuple(violations))


def entail2_witness() -> bool:
    """(h,0,0) preserves lambda1 yet sends (0,h) in r2 to (h,0) outside it,
    so lambda1 does not entail r2."""
    table = TritTable.from_string("h00")
    space = StructuredSpace.power(1, (), (LAMBDA1,))
    homs = enumerate_homs_bruteforce(space)
    if table.entries not in homs.maps:
        return False
    return not preserves_relation(table, R2, StructuredSpace.power(1))


@dataclass(frozen=True)
class EvaluationReport:
    carrier_size: int
    dual_size: int
    double_dual_size: int
    bijective: bool
    homomorphism: bool

    @property
    def passed(self) -> bool:
        return self.bijective and self.homomorphism


def evaluation_map_check(
    carrier, variant_name: str = "relational", carrier_cap: int = 12
) -> EvaluationReport:
    """Is a |-> (f |-> f(a)) an isomorphism onto the double dual?

    The dual D(A) is the set of algebra homs A -> S viewed inside S^A with
    the variant's structure; the double dual is the hom-set of that space.
    """
    carrier = tuple(sorted(set(tuple(p) for p in carrier)))
    k = len(carrier[0])
    if k > 2:
        raise CapExceededError(f"evaluation check capped at powers <= 2, got {k}")
    if not is_subuniverse(carrier, k):
        raise ValueError("carrier is not a subuniverse")

    var = variant(variant_name)
    duals = algebra_homs(carrier)
    dual_space = StructuredSpace.from_points(
        duals, var.relations, var.partial_ops + var.total_ops
    )
    double_dual = enumerate_homs_bruteforce(dual_space, carrier_cap=carrier_cap)

    dual_order = {p: i for i, p in enumerate(dual_space.carrier)}
    evaluations = []
    for i, _a in enumerate(carrier):
        values = [None] * len(duals)
        for f in duals:
            values[dual_order[f]] = f[i]
        evaluations.append(tuple(values))

    bijective = len(set(evaluations)) == len(carrier) and set(evaluations) == set(
        double_dual.maps
    )

    index = {p: i for i, p in enumerate(carrier)}
    homomorphism = True
    for x in carrier:
        for y in carrier:
            em = tuple(map(min, evaluations[index[x]], evaluations[index[y]]))
            ej = tuple(map(max, evaluations[index[x]], evaluations[index[y]]))
            if em != evaluations[index[tuple(map(min, x, y))]]:
                homomorphism = False
            if ej != evaluations[index[tuple(map(max, x, y))]]:
                homomorphism = False
    for c in ELEMENTS:
        if evaluations[index[(c,) * k]] != (c,) * len(duals):
            homomorphism = False

    return EvaluationReport(
        len(carrier),
        len(duals),
        len(double_dual),
        bijective,
        homomorphism,
    )


def persistence_check(n: int, carrier_cap: int = 12) -> bool:
    """The optimal strong structure has the same morphisms S^n -> S as the
    full relational one, and the same join-irreducible geometry."""
    if n > 2:
        raise CapExceededError(f"persistence check capped at power 2, got {n}")
    homs = homs_for_variant(n, "optimal-strong", carrier_cap=carrier_cap)
    clone = clone_closure(n)
    if set(homs.maps) != set(clone.maps):
        return False
    lattice = FiniteLattice.from_leq(
        homs.tables(), lambda x, y: x.leq(y), validate=False
    )
    ji = join_irreducibles(lattice)
    cube = hairy_cube_recursive(n)
    return {t.entries for t in ji.elements} == {
        e.table.entries for e in cube.elements
    }

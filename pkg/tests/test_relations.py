"""Relations, the subalgebra lattice of S^2 and the congruences of S."""

from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hairycube.core import ELEMENTS, H, ONE, ZERO
from hairycube.relations import (
    DIAGONAL,
    FULL,
    PAIRS,
    R1,
    R2,
    R3,
    BinaryRelation,
    PartialOp,
    canonical_name,
    enumerate_congruences,
    enumerate_subalgebras,
    intersect,
    inverse,
    irreducibility_index,
    is_subuniverse,
    meet_irreducible_congruences,
    relation,
    subuniverses_of_carrier,
)


def test_generating_relations_pair_sets():
    assert set(R1.pairs()) == set(PAIRS) - {(ONE, ZERO)}
    assert set(R2.pairs()) == set(PAIRS) - {(ONE, ZERO), (H, ZERO)}
    assert set(R3.pairs()) == {
        (ZERO, ZERO), (ZERO, H), (H, ZERO), (H, H), (ONE, ONE)
    }
    assert relation(1) == R1 and relation(2) == R2 and relation(3) == R3
    with pytest.raises(ValueError):
        relation(4)


def test_relation_basics():
    assert len(FULL) == 9 and len(DIAGONAL) == 3
    assert DIAGONAL.issubset(R3) and R3.issubset(R1.inverse().union(R1))
    assert inverse(inverse(R2)) == R2
    assert intersect(R1, R1.inverse()) == R1 & R1.inverse()
    assert (ONE, ZERO) not in set(R1)
    assert str(DIAGONAL) == "{(0,0),(h,h),(1,1)}"
    with pytest.raises(ValueError):
        BinaryRelation(1 << 9)


def test_equivalence_predicate():
    assert DIAGONAL.is_equivalence()
    assert FULL.is_equivalence()
    assert R3.is_equivalence()  # the partition {{0,h},{1}}
    assert not R1.is_equivalence()  # not symmetric
    linked = BinaryRelation.from_pairs(
        [(ZERO, ZERO), (H, H), (ONE, ONE), (ZERO, H), (H, ZERO), (H, ONE), (ONE, H)]
    )
    assert not linked.is_equivalence()  # 0~h~1 without 0~1


def test_subuniverse_requires_bar_closure():
    # meet/join closure alone would also accept r3 u {(h,1)}: the bar of
    # (h,1) is (1,h), which escapes the set.
    fattened = R3.union(BinaryRelation.from_pairs([(H, ONE)]))
    assert is_subuniverse(R3, 2)
    assert not is_subuniverse(fattened, 2)


def test_subuniverse_input_validation():
    with pytest.raises(ValueError):
        is_subuniverse(R1, 1)
    with pytest.raises(ValueError):
        is_subuniverse([(ZERO, ZERO)], 4)
    with pytest.raises(ValueError):
        is_subuniverse([(ZERO,), (ZERO, ONE)], 1)
    assert is_subuniverse([(e,) for e in ELEMENTS], 1)
    assert not is_subuniverse([(ZERO,), (ONE,)], 1)  # h missing


def test_thirteen_subalgebras():
    lat = enumerate_subalgebras()
    assert len(lat.elements) == 13
    assert lat.bottom() == DIAGONAL
    assert lat.top() == FULL
    assert set(lat.names()) == {
        "Δ", "r1", "r1⁻¹", "r2", "r2⁻¹", "r3", "r1∩r1⁻¹", "r2∩r1⁻¹",
        "(r2∩r1⁻¹)⁻¹", "r2∩r2⁻¹", "r2∩r1⁻¹∩r3", "(r2∩r1⁻¹∩r3)⁻¹", "S²",
    }
    # sizes grow along the canonical order
    sizes = [len(r) for r in lat.elements]
    assert sizes == sorted(sizes)
    assert sizes == [3, 4, 4, 5, 5, 6, 6, 7, 7, 7, 8, 8, 9]


EXPECTED_COVERS = {
    ("Δ", "r2∩r1⁻¹∩r3"), ("Δ", "(r2∩r1⁻¹∩r3)⁻¹"), ("Δ", "r2∩r2⁻¹"),
    ("r2∩r1⁻¹∩r3", "r3"), ("r2∩r1⁻¹∩r3", "r2∩r1⁻¹"),
    ("(r2∩r1⁻¹∩r3)⁻¹", "r3"), ("(r2∩r1⁻¹∩r3)⁻¹", "(r2∩r1⁻¹)⁻¹"),
    ("r2∩r2⁻¹", "r2∩r1⁻¹"), ("r2∩r2⁻¹", "(r2∩r1⁻¹)⁻¹"),
    ("r3", "r1∩r1⁻¹"),
    ("r2∩r1⁻¹", "r2"), ("r2∩r1⁻¹", "r1∩r1⁻¹"),
    ("(r2∩r1⁻¹)⁻¹", "r1∩r1⁻¹"), ("(r2∩r1⁻¹)⁻¹", "r2⁻¹"),
    ("r2", "r1"), ("r1∩r1⁻¹", "r1"), ("r1∩r1⁻¹", "r1⁻¹"), ("r2⁻¹", "r1⁻¹"),
    ("r1", "S²"), ("r1⁻¹", "S²"),
}


def test_subalgebra_hasse_diagram():
    lat = enumerate_subalgebras()
    assert set(lat.cover_names()) == EXPECTED_COVERS
    assert len(lat.covers) == 20


def test_subalgebra_lattice_operations():
    lat = enumerate_subalgebras()
    n = len(lat.elements)
    for i in range(n):
        for j in range(n):
            met = lat.elements[lat.meets[i][j]]
            assert met == lat.elements[i] & lat.elements[j]
            joined = lat.elements[lat.joins[i][j]]
            assert lat.elements[i].issubset(joined)
            assert lat.elements[j].issubset(joined)
    # r2 u r2⁻¹ already exhausts S^2, while the two four-element
    # subalgebras join to r3
    i = lat.index(R2)
    j = lat.index(R2.inverse())
    assert canonical_name(lat.elements[lat.joins[i][j]]) == "S²"
    small = R2 & R1.inverse() & R3
    i = lat.index(small)
    j = lat.index(small.inverse())
    assert canonical_name(lat.elements[lat.joins[i][j]]) == "r3"


def test_family_closed_under_inverse_and_intersection():
    lat = enumerate_subalgebras()
    family = set(lat.elements)
    for r in family:
        assert r.inverse() in family
    for a, b in combinations(family, 2):
        assert (a & b) in family


@given(st.integers(min_value=0, max_value=(1 << 9) - 1))
def test_membership_matches_direct_check(mask):
    rel = BinaryRelation(mask)
    in_lattice = rel in set(enumerate_subalgebras().elements)
    assert in_lattice == (DIAGONAL.issubset(rel) and is_subuniverse(rel, 2))


def test_congruence_lattice():
    cons = enumerate_congruences()
    assert [canonical_name(c) for c in cons] == ["Δ", "r3", "r2∩r2⁻¹", "S²"]
    assert R3 & (R2 & R2.inverse()) == DIAGONAL
    assert meet_irreducible_congruences() == (R3, R2 & R2.inverse())


def test_irreducibility_index_is_two():
    assert subuniverses_of_carrier() == (frozenset(ELEMENTS),)
    assert irreducibility_index() == 2
    # neither meet-irreducible reaches the diagonal alone
    for c in meet_irreducible_congruences():
        assert c != DIAGONAL


def test_partial_op_validation():
    op = PartialOp.from_graph(
        "f", DIAGONAL, [(e, e, e) for e in ELEMENTS]
    )
    assert op(H, H) == H
    assert op.defined(ZERO, ZERO) and not op.defined(ZERO, ONE)
    with pytest.raises(ValueError):
        op(ZERO, ONE)
    assert op.graph() == tuple((e, e, e) for e in ELEMENTS)
    with pytest.raises(ValueError):
        PartialOp.from_graph("g", DIAGONAL, [(ZERO, ZERO, ZERO)])  # domain mismatch
    with pytest.raises(ValueError):
        PartialOp.from_graph(
            "g", DIAGONAL,
            [(ZERO, ZERO, ZERO), (ZERO, ZERO, H), (H, H, H), (ONE, ONE, ONE)],
        )  # duplicate cell

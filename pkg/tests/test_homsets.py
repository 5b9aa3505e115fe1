"""Hom-set enumeration: brute force vs clone closure, slices, caps."""

from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hairycube.core import ELEMENTS, H, ONE, TritTable, ZERO, all_tuples
from hairycube.duality import LAMBDA1
from hairycube.homsets import (
    CapExceededError,
    StructuredSpace,
    assemble,
    check_construct_conditions,
    clone_closure,
    enumerate_homs_bruteforce,
    point_slice,
    preserves_partial_op,
    preserves_relation,
    slice_first,
    unary_morphisms,
)
from hairycube.relations import R1, R2, R3

UNARY = ("000", "0hh", "0h1", "hhh", "hh1", "11h", "111")


def test_unary_homset_is_the_reference_list():
    assert tuple(str(t) for t in unary_morphisms()) == UNARY
    brute = enumerate_homs_bruteforce(StructuredSpace.power(1))
    assert tuple(str(t) for t in brute.tables()) == UNARY


def test_identity_preserves_everything():
    ident = TritTable.projection(1, 1)
    space = StructuredSpace.power(1)
    for rel in (R1, R2, R3):
        assert preserves_relation(ident, rel, space)
    assert preserves_partial_op(
        ident, LAMBDA1, StructuredSpace.power(1, (), (LAMBDA1,))
    )


def test_near_miss_tables_break_one_relation_each():
    space = StructuredSpace.power(1)
    t = TritTable.from_string("1h1")
    assert preserves_relation(t, R1, space) and preserves_relation(t, R2, space)
    assert not preserves_relation(t, R3, space)
    t = TritTable.from_string("00h")
    assert preserves_relation(t, R1, space) and preserves_relation(t, R3, space)
    assert not preserves_relation(t, R2, space)


def test_clone_equals_bruteforce_at_small_arity():
    for n in (1, 2):
        clone = clone_closure(n)
        brute = enumerate_homs_bruteforce(
            StructuredSpace.power(n), carrier_cap=3 ** n
        )
        assert clone.maps == brute.maps  # same canonical order, same sets


def test_clone_counts():
    assert len(clone_closure(1)) == 7
    assert len(clone_closure(2)) == 35
    assert len(clone_closure(3)) == 775


def test_bruteforce_at_arity_three_agrees_with_clone():
    brute = enumerate_homs_bruteforce(StructuredSpace.power(3), carrier_cap=27)
    assert brute.maps == clone_closure(3).maps


def test_carrier_cap_enforced():
    with pytest.raises(CapExceededError):
        enumerate_homs_bruteforce(StructuredSpace.power(3), carrier_cap=12)
    with pytest.raises(CapExceededError):
        clone_closure(4, arity_cap=3)


def test_homset_membership_and_lattice():
    homs = enumerate_homs_bruteforce(StructuredSpace.power(1))
    assert TritTable.from_string("0hh") in homs
    assert TritTable.from_string("01h") not in homs
    assert len(homs) == 7
    lat = homs.lattice()
    assert lat.n == 7
    bottom = lat.elements[lat.bottom_index()]
    assert bottom == tuple(TritTable.constant(1, ZERO).entries)


def test_structured_space_validation():
    with pytest.raises(ValueError):
        StructuredSpace.from_points([])
    with pytest.raises(ValueError):
        StructuredSpace.from_points([(ZERO,), (ZERO, ONE)])
    # carrier must be closed under the componentwise partial operation
    with pytest.raises(ValueError):
        StructuredSpace.from_points(
            [(ZERO,), (ONE,)], partial_ops=(LAMBDA1,)
        )
    ok = StructuredSpace.from_points([(ZERO,), (H,), (ONE,)], (R1,), (LAMBDA1,))
    assert ok.is_full_power()


def test_proper_carrier_maps_are_not_tables():
    space = StructuredSpace.from_points([(ZERO, ZERO), (H, H), (ONE, ONE)])
    homs = enumerate_homs_bruteforce(space)
    with pytest.raises(ValueError):
        homs.tables()
    assert all(len(m) == 3 for m in homs.maps)


def test_slice_assemble_roundtrip_explicit():
    t = TritTable.from_string("0000hh0h1")
    s0, sh, s1 = (slice_first(t, a) for a in ELEMENTS)
    assert (str(s0), str(sh), str(s1)) == ("000", "0hh", "0h1")
    assert assemble(s0, sh, s1).entries == t.entries
    assert str(point_slice(t, (ONE,))) == "0h1"
    assert str(point_slice(t, (ZERO,))) == "000"
    with pytest.raises(ValueError):
        point_slice(t, (ZERO, ZERO))
    with pytest.raises(ValueError):
        slice_first(TritTable.projection(1, 1), ZERO).entries  # arity 0 slice is fine
        slice_first(TritTable.constant(0, ZERO), ZERO)


entries2 = st.tuples(*([st.sampled_from(ELEMENTS)] * 9))


@given(entries2)
def test_slice_assemble_roundtrip_random(entries):
    t = TritTable(2, entries)
    rebuilt = assemble(*(slice_first(t, a) for a in ELEMENTS))
    assert rebuilt.entries == t.entries
    for tail in all_tuples(1):
        ps = point_slice(t, tail)
        for a in ELEMENTS:
            assert ps(a) == t(a, *tail)


def test_construct_conditions_hold_on_members():
    unary = clone_closure(1)
    for t in clone_closure(2).tables():
        assert check_construct_conditions(t, unary)


def test_construct_conditions_reject_nonmembers_at_arity_two():
    # At arity 2 the slice conditions happen to cut out the hom-set exactly.
    unary = clone_closure(1)
    members = set(clone_closure(2).maps)
    passing = set()
    for entries in product(ELEMENTS, repeat=9):
        if check_construct_conditions(TritTable(2, entries), unary):
            passing.add(entries)
    assert passing == members


def test_construct_conditions_arity_guard():
    with pytest.raises(ValueError):
        check_construct_conditions(TritTable.projection(1, 1), clone_closure(1))


def test_clone_closed_under_operations():
    clone = clone_closure(2)
    members = set(clone.maps)
    tables = clone.tables()
    for t in tables:
        assert t.bar().entries in members
        assert t.meet_h().entries in members
    for a in tables[:10]:
        for b in tables[:10]:
            assert a.meet(b).entries in members
            assert a.join(b).entries in members

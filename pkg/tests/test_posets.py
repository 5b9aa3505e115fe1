"""Bitmask poset machinery."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hairycube.posets import FiniteLattice, FinitePoset


def divides(a, b):
    return b % a == 0


def test_from_leq_divisibility():
    p = FinitePoset.from_leq(range(1, 11), divides)
    assert p.n == 10
    assert p.leq(2, 8) and not p.leq(2, 9)
    assert p.bottom_index() == p.index(1)
    with pytest.raises(ValueError):
        p.top_index()  # no greatest element among 1..10
    assert set(p.cover_pairs()) >= {(1, 2), (2, 4), (3, 9), (5, 10)}
    assert (2, 8) not in set(p.cover_pairs())  # 4 sits between


def test_validation_rejects_non_orders():
    with pytest.raises(ValueError):
        FinitePoset.from_leq([0, 1], lambda x, y: True)  # not antisymmetric
    with pytest.raises(ValueError):
        FinitePoset.from_leq([0, 1], lambda x, y: x != y)  # not reflexive
    with pytest.raises(ValueError):
        # 0<1, 1<2 without 0<2 breaks transitivity
        FinitePoset.from_leq(
            [0, 1, 2], lambda x, y: x == y or (x, y) in {(0, 1), (1, 2)}
        )
    with pytest.raises(ValueError):
        FinitePoset([0, 0], [1, 3])  # duplicate elements


def test_cover_indices_both_directions():
    p = FinitePoset.from_leq([1, 2, 3, 6], divides)
    six = p.index(6)
    one = p.index(1)
    assert sorted(p.lower_cover_indices(six)) == sorted(
        [p.index(2), p.index(3)]
    )
    assert sorted(p.upper_cover_indices(one)) == sorted(
        [p.index(2), p.index(3)]
    )
    assert p.comparable(1, 6) and not p.comparable(2, 3)


def test_induced_subposet():
    p = FinitePoset.from_leq(range(1, 13), divides)
    q = p.induced([p.index(x) for x in (1, 2, 4, 8)])
    assert q.n == 4
    assert q.cover_pairs() == ((1, 2), (2, 4), (4, 8))


def test_downsets_of_chain_and_antichain():
    chain = FinitePoset.from_leq([1, 2, 4], divides)
    assert len(chain.downset_masks()) == 4  # {}, {1}, {1,2}, all
    anti = FinitePoset.from_leq([2, 3, 5], divides)
    assert len(anti.downset_masks()) == 8
    downs = chain.downsets()
    assert frozenset() in downs and frozenset({1, 2, 4}) in downs
    assert all(
        all(y in d for x in d for y in (1, 2, 4) if divides(y, x)) for d in downs
    )


def test_downset_cap():
    big = FinitePoset.from_leq(range(21), lambda x, y: x == y, validate=False)
    with pytest.raises(ValueError):
        big.downset_masks()


def test_isomorphism_found_and_refused():
    p = FinitePoset.from_leq([1, 2, 3, 6], divides)
    q = FinitePoset.from_leq(
        ["00", "01", "10", "11"],
        lambda x, y: all(a <= b for a, b in zip(x, y)),
    )
    iso = p.isomorphism_to(q)
    assert iso is not None
    assert iso[1] == "00" and iso[6] == "11"
    assert {iso[2], iso[3]} == {"01", "10"}
    chain = FinitePoset.from_leq([1, 2, 4, 8], divides)
    assert p.isomorphism_to(chain) is None
    smaller = FinitePoset.from_leq([1, 2], divides)
    assert p.isomorphism_to(smaller) is None


def test_poset_equality_is_by_relation():
    p = FinitePoset.from_leq([1, 2, 4], divides)
    q = FinitePoset.from_leq([4, 2, 1], divides)
    assert p == q
    r = FinitePoset.from_leq([1, 2, 5], divides)
    assert p != r


def test_lattice_meets_and_joins():
    lat = FiniteLattice.from_leq([1, 2, 3, 6], divides)
    assert lat.meet(2, 3) == 1
    assert lat.join(2, 3) == 6
    assert lat.meet_index(lat.index(6), lat.index(2)) == lat.index(2)
    assert lat.join_irreducible_indices() == (lat.index(2), lat.index(3))


def test_non_lattice_rejected():
    # two maximal elements have no join
    with pytest.raises(ValueError):
        FiniteLattice.from_leq([1, 2, 3], divides).join(2, 3)


@st.composite
def divisor_subsets(draw):
    values = draw(
        st.sets(st.integers(min_value=1, max_value=30), min_size=1, max_size=8)
    )
    return sorted(values)


@given(divisor_subsets())
def test_random_subposets_are_consistent(values):
    p = FinitePoset.from_leq(values, divides)
    # covers regenerate the full order by transitivity
    reach = {x: {x} for x in values}
    changed = True
    while changed:
        changed = False
        for a, b in p.cover_pairs():
            for src, seen in reach.items():
                if a in seen and b not in seen:
                    seen.add(b)
                    changed = True
    for x in values:
        for y in values:
            assert p.leq(x, y) == (y in reach[x])


@given(divisor_subsets())
def test_downsets_are_exactly_down_closed_sets(values):
    p = FinitePoset.from_leq(values, divides)
    masks = set(p.downset_masks())
    for mask in range(1 << p.n):
        closed = all(
            not (mask >> i & 1) or (mask & p.down_mask(i)) == p.down_mask(i)
            for i in range(p.n)
        )
        assert closed == (mask in masks)

"""Join-irreducible geometry: recursion, extraction, polynomials, topology."""

from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hairycube.core import H, TritTable
from hairycube.cube import (
    PartiallyStoneSpaceFinite,
    chi_lattice,
    downset_topology,
    eta,
    eval_polynomial,
    extracted_hairy_cube,
    hairy_cube_recursive,
    ji_meet_formula_check,
    join_irreducibles,
    open_set_order,
    polynomial_form,
    polynomial_label,
    pss_homeomorphism,
    verify_hairy_cube,
)
from hairycube.posets import FinitePoset

UNARY_JI = ("0hh", "0h1", "hhh", "11h")
UNARY_JI_COVERS = {("0hh", "0h1"), ("0hh", "hhh"), ("hhh", "11h")}


def test_unary_join_irreducibles():
    cube = hairy_cube_recursive(1)
    assert tuple(str(e.table) for e in cube.elements) == UNARY_JI
    covers = {
        (str(a.table), str(b.table)) for a, b in cube.cover_pairs()
    }
    assert covers == UNARY_JI_COVERS


def test_recursive_equals_extracted():
    for n in (1, 2, 3):
        rec = hairy_cube_recursive(n)
        ext = extracted_hairy_cube(n)
        assert {e.table.entries for e in rec.elements} == {
            t.entries for t in ext.elements
        }
        relabel = {e.table.entries: e for e in rec.elements}
        mirrored = FinitePoset.from_leq(
            [relabel[t.entries] for t in ext.elements],
            lambda x, y: x.table.leq(y.table),
            validate=False,
        )
        assert mirrored == rec


def test_shape_clauses_pass():
    for n in (1, 2, 3):
        cube = hairy_cube_recursive(n)
        assert cube.n == 2 ** (n + 1)
        report = verify_hairy_cube(cube, n)
        assert report.passed, report.failed_clauses()
        assert [name for name, _, _ in report.clauses] == [
            "base-is-cube",
            "hairs-incomparable",
            "unique-hair-cover",
            "hair-covers-own-base",
        ]


def test_shape_clauses_fail_on_wrong_poset():
    cube1 = hairy_cube_recursive(1)
    missing_base = cube1.induced([1, 2, 3])  # 0h1, hhh, 11h
    report = verify_hairy_cube(missing_base, 1)
    assert not report.passed
    assert "base-is-cube" in report.failed_clauses()
    # a bare cube with no hairs: base clause holds, cover clause cannot
    only_base = cube1.induced([0, 2])  # 0hh, hhh
    report = verify_hairy_cube(only_base, 1)
    assert not report.passed
    assert report.failed_clauses() == ("unique-hair-cover",)


def test_eta_is_the_cube_coordinate():
    for n in (1, 2, 3):
        cube = hairy_cube_recursive(n)
        for e in cube.elements:
            if e.is_base:
                assert eta(n, e.table) == e.epsilon
    with pytest.raises(ValueError):
        eta(1, TritTable.from_string("0h1"))  # not below h
    with pytest.raises(ValueError):
        eta(1, TritTable.from_string("000"))  # below h but not a base JI
    with pytest.raises(ValueError):
        eta(2, TritTable.from_string("0hh"))


def test_polynomial_roundtrip_all_dimensions():
    for n in (1, 2, 3):
        for eps in product((0, 1), repeat=n):
            for flag in (False, True):
                table = eval_polynomial(eps, flag, n)
                assert polynomial_form(table, n) == (eps, flag)
        for e in hairy_cube_recursive(n).elements:
            assert eval_polynomial(e.epsilon, e.meet_h, n) == e.table


def test_polynomial_labels():
    assert polynomial_label((0,), False) == "p1"
    assert polynomial_label((1,), False) == "~p1"
    assert polynomial_label((0,), True) == "p1∧h"
    assert polynomial_label((1, 0, 1), True) == "~p1∧p2∧~p3∧h"


N3_LABELS = {
    f"{a}p1∧{b}p2∧{c}p3{d}"
    for a in ("", "~")
    for b in ("", "~")
    for c in ("", "~")
    for d in ("", "∧h")
}


def test_dimension_three_figure():
    cube = hairy_cube_recursive(3)
    assert cube.n == 16
    by_label = {e.label: e for e in cube.elements}
    assert set(by_label) == N3_LABELS
    hair_edges = 0
    cube_edges = 0
    for a, b in cube.cover_pairs():
        if b.is_base:
            cube_edges += 1
            # covering base differs in exactly one raised coordinate
            diffs = [i for i, (x, y) in enumerate(zip(a.epsilon, b.epsilon)) if x != y]
            assert len(diffs) == 1 and a.epsilon[diffs[0]] == 0
        else:
            hair_edges += 1
            assert a.is_base and a.epsilon == b.epsilon
    assert hair_edges == 8 and cube_edges == 12


def test_ji_meet_formula():
    for n in (1, 2, 3):
        assert ji_meet_formula_check(n)
    # the distinctness hypothesis is necessary: a hair is its own meet
    hair = TritTable.from_string("0h1")
    assert hair.meet(hair) == hair
    assert not hair.leq(TritTable.constant(1, H))
    with pytest.raises(ValueError):
        ji_meet_formula_check(4)


def test_join_irreducibles_of_chi():
    for n in (1, 2):
        lat = chi_lattice(n)
        ji = join_irreducibles(lat)
        assert ji.n == 2 ** (n + 1)
        # every lattice member is the join of the irreducibles below it
        for i, t in enumerate(lat.elements):
            below = [
                u for u in ji.elements if u.leq(t)
            ]
            acc = lat.elements[lat.bottom_index()]
            for u in below:
                acc = acc.join(u)
            assert acc == t


def test_alexandrov_roundtrip_on_cubes():
    for n in (1, 2, 3):
        cube = hairy_cube_recursive(n)
        opens = downset_topology(cube)
        assert open_set_order(opens, elements=cube.elements) == cube


@given(st.sets(st.integers(min_value=0, max_value=15), min_size=1, max_size=6))
def test_alexandrov_roundtrip_random_subposets(indices):
    cube = hairy_cube_recursive(3)
    sub = cube.induced(sorted(indices))
    opens = downset_topology(sub)
    assert open_set_order(opens, elements=sub.elements) == sub


def test_open_set_order_rejects_non_t0():
    with pytest.raises(ValueError):
        open_set_order([frozenset(), frozenset({"a", "b"})])
    with pytest.raises(ValueError):
        open_set_order([frozenset({"a"})], elements=["a", "b"])


def test_pss_accepts_the_real_thing():
    for n in (1, 2):
        cand = PartiallyStoneSpaceFinite.of_dimension(n)
        res = pss_homeomorphism(cand, n)
        assert res.ok and res.failed_clause is None
        assert len(res.mapping) == 2 ** (n + 1)


def _space(elements, pairs, base):
    closure = dict()
    order = set(pairs) | {(x, x) for x in elements}
    changed = True
    while changed:
        changed = False
        for a, b in list(order):
            for c, d in list(order):
                if b == c and (a, d) not in order:
                    order.add((a, d))
                    changed = True
    poset = FinitePoset.from_leq(elements, lambda x, y: (x, y) in order)
    return PartiallyStoneSpaceFinite.from_poset(poset, frozenset(base))


def test_pss_accepts_relabeled_candidate():
    # same shape as dimension 1, arbitrary names, reversed insert order
    cand = _space(
        ["top", "mid", "lo", "spike"],
        [("lo", "mid"), ("lo", "spike"), ("mid", "top")],
        base=["lo", "mid"],
    )
    res = pss_homeomorphism(cand, 1)
    assert res.ok
    assert res.mapping["lo"].label == "p1∧h"
    assert res.mapping["spike"].label == "p1"
    assert res.mapping["top"].label == "~p1"


def test_pss_rejects_each_failure_mode():
    chain = _space(["a", "b", "c"], [("a", "b"), ("b", "c")], base=["a", "b", "c"])
    assert pss_homeomorphism(chain, 1).failed_clause == "base-is-cube"

    comparable_hairs = _space(
        ["b0", "b1", "g0", "g1"],
        [("b0", "b1"), ("b0", "g0"), ("b1", "g1"), ("g0", "g1")],
        base=["b0", "b1"],
    )
    assert (
        pss_homeomorphism(comparable_hairs, 1).failed_clause
        == "hairs-incomparable"
    )

    missing_hair = _space(
        ["b0", "b1", "g0"],
        [("b0", "b1"), ("b0", "g0")],
        base=["b0", "b1"],
    )
    assert (
        pss_homeomorphism(missing_hair, 1).failed_clause == "unique-hair-cover"
    )

    shared_hair = _space(
        ["00", "01", "10", "11", "g", "h00", "h11"],
        [
            ("00", "01"), ("00", "10"), ("01", "11"), ("10", "11"),
            ("01", "g"), ("10", "g"), ("00", "h00"), ("11", "h11"),
        ],
        base=["00", "01", "10", "11"],
    )
    assert (
        pss_homeomorphism(shared_hair, 2).failed_clause == "hair-covers-one-base"
    )


def test_pss_base_membership_validated():
    poset = FinitePoset.from_leq(["a"], lambda x, y: x == y)
    with pytest.raises(ValueError):
        PartiallyStoneSpaceFinite.from_poset(poset, frozenset({"zz"}))

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from conftest import tables
from skewbrace.brace import direct_sum, make_trivial_or_almost
from skewbrace.enumeration import enumerate_braces
from skewbrace.errors import NotContainingZero, PreconditionViolated
from skewbrace.groups import abelian_group, cyclic_group, is_subgroup, symmetric_group
from skewbrace.ideals import (
    KINDS,
    all_ideals,
    classify_subset,
    fixator,
    generated,
    is_left_ideal,
    loewy_series,
    minimal_ideal_data,
    minimal_ideals,
    set_sum,
    strongly_prime_and_radicals,
    subideal_defect,
)

CATALOG = [e.brace for n in range(1, 9) for e in enumerate_braces(n)]


def test_ideal_lattices_match_naive_scan():
    for B in CATALOG:
        add, mul = tables(B)
        for k, kind in enumerate(KINDS):
            assert all_ideals(B, kind) == oracles.all_ideals(add, mul, k), (B, kind)


def test_classify_examples(E4, AT6, A3):
    f = classify_subset(E4, {0, 2})
    assert (f.subbrace, f.left_ideal, f.strong_left_ideal, f.ideal) == (True, True, True, True)
    assert f.subideal_defect == 1
    assert classify_subset(AT6, A3).ideal
    t = next(a for a in range(6) if AT6.add.element_orders[a] == 2)
    f = classify_subset(AT6, {0, t})
    assert f.subbrace and not f.left_ideal
    with pytest.raises(NotContainingZero):
        classify_subset(E4, {1, 2})


def test_generated_examples(E4, AT6, A3):
    assert generated(E4, {1}, "ideal") == E4.full
    assert generated(E4, {2}, "ideal") == {0, 2}
    for kind in KINDS:
        assert generated(E4, set(), kind) == {0}
    c = next(a for a in range(6) if AT6.add.element_orders[a] == 3)
    assert generated(AT6, {c}, "ideal") == A3


def test_generated_is_least(E4, AT6):
    for B in (E4, AT6):
        for kind in KINDS:
            ideals = all_ideals(B, kind)
            for x in range(B.order):
                g = generated(B, {x}, kind)
                assert g in ideals
                assert all(g <= I for I in ideals if x in I)


def test_all_ideals_examples(E4, AT6, A3):
    assert all_ideals(E4) == [{0}, {0, 2}, E4.full]
    assert all_ideals(AT6) == [{0}, A3, AT6.full]
    T = make_trivial_or_almost(cyclic_group(5))
    assert all_ideals(T) == [{0}, T.full]


def test_left_ideal_sums_need_normality():
    # two left ideals of the trivial brace on S3 whose sum is not a subgroup
    T = make_trivial_or_almost(symmetric_group(3))
    invols = [a for a in range(6) if T.add.element_orders[a] == 2]
    I, J = frozenset({0, invols[0]}), frozenset({0, invols[1]})
    assert is_left_ideal(T, I) and is_left_ideal(T, J)
    S = set_sum(T, I, J)
    assert S == {T.plus(i, j) for i in I for j in J}
    assert len(S) == 4 and not is_subgroup(T.add, S)


def test_subideal_defect(AT6):
    for I in all_ideals(AT6):
        assert subideal_defect(AT6, I) == (0 if I == AT6.full else 1)
    t = next(a for a in range(6) if AT6.add.element_orders[a] == 2)
    assert subideal_defect(AT6, frozenset({0, t})) is None


def test_minimal_ideal_data(E4):
    d = minimal_ideal_data(E4)
    assert (d.b_s, d.b_u, d.b_v) == ({2}, {2}, set())
    assert d.s == d.u == {0, 2} and d.v == {0}
    P = make_trivial_or_almost(cyclic_group(5))
    d = minimal_ideal_data(P)
    assert d.b_s == frozenset(range(1, 5)) and d.s == P.full
    Z2 = make_trivial_or_almost(cyclic_group(2))
    K = direct_sum(Z2, Z2)
    d = minimal_ideal_data(K)
    assert d.s == K.full and len(d.direct_sum_witness) == 2


def test_minimal_ideals_match_naive():
    for B in CATALOG:
        assert sorted(minimal_ideals(B), key=sorted) == sorted(oracles.minimal_ideals(*tables(B)), key=sorted)


def test_loewy_examples(E4, AT6, A3):
    rep = loewy_series(E4)
    assert rep.terms == [{0}, {0, 2}, E4.full] and rep.class_or_length == 2
    rep = loewy_series(AT6)
    assert rep.terms == [{0}, A3, AT6.full] and rep.class_or_length == 2
    assert loewy_series(make_trivial_or_almost(cyclic_group(7))).class_or_length == 1


def test_loewy_length_matches_naive_quotients():
    for B in CATALOG:
        assert loewy_series(B).class_or_length == oracles.loewy_length(*tables(B))


def test_fixators(E4, AT6, A3):
    assert fixator(E4, "fix-l", E4.full, E4.full, {0}) == {0, 2}
    assert fixator(E4, "stab", E4.full, {0, 2}) == E4.full
    assert fixator(AT6, "fix-l", AT6.full, AT6.full, A3) == AT6.full
    with pytest.raises(PreconditionViolated):
        fixator(E4, "fix-l", E4.full, E4.full, {0, 1})


def test_radicals(E4):
    r = strongly_prime_and_radicals(E4)
    assert r.radical_intersection == r.weakly_soluble_radical == E4.full
    assert r.radicals_agree
    T = make_trivial_or_almost(cyclic_group(2))
    assert strongly_prime_and_radicals(T).weakly_soluble_radical == T.full
    for B in CATALOG:
        assert strongly_prime_and_radicals(B).radicals_agree


def test_trivial_abelian_left_ideals_are_ideals():
    K = make_trivial_or_almost(abelian_group(2, 2))
    assert all_ideals(K, "ideal") == all_ideals(K, "left-ideal")


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(CATALOG), st.data())
def test_generated_from_random_seeds(B, data):
    seed = data.draw(st.sets(st.integers(0, B.order - 1), max_size=3))
    add, mul = tables(B)
    for k, kind in enumerate(KINDS):
        g = generated(B, seed, kind)
        assert oracles.ideal_kinds(add, mul, g)[k]
        assert set(seed) <= g

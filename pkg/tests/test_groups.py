import itertools

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from skewbrace.errors import GroupError, NotAssociative, NoIdentity, NoInverse, NotClosed
from skewbrace.groups import (
    abelian_group,
    automorphism_group,
    build_group,
    center,
    commutator_subgroup,
    cyclic_group,
    dihedral_group,
    find_group_isomorphism,
    generated_subgroup,
    group_isomorphism,
    group_series,
    holomorph,
    is_normal,
    nilpotency_solubility,
    pi_decomposition,
    quaternion_group,
    quotient_group,
    relabel_group,
    relative_centralizer,
    subgroups,
    symmetric_group,
)


def z4_table():
    return [[(a + b) % 4 for b in range(4)] for a in range(4)]


def test_cyclic_table_is_valid():
    G = build_group(4, z4_table())
    assert G.exponent == 4
    assert G.is_abelian


def test_s3_table_is_valid(S3):
    G = build_group(6, S3.table)
    assert G.exponent == 6
    assert not G.is_abelian
    assert oracles.is_associative(S3.table)


def test_broken_latin_square_rejected():
    t = z4_table()
    t[1][1] = 1
    with pytest.raises((NotAssociative, NoInverse)):
        build_group(4, t)


def test_out_of_range_entry_rejected():
    t = z4_table()
    t[2][3] = 7
    with pytest.raises(NotClosed):
        build_group(4, t)


def test_identity_must_be_zero():
    # Z2 with the identity placed at index 1
    with pytest.raises(NoIdentity):
        build_group(2, [[1, 0], [0, 1]])


def test_non_associative_latin_square():
    # a loop of order 5 that is not a group
    t = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ]
    with pytest.raises(GroupError):
        build_group(5, t)


def test_generated_subgroup():
    Z4 = cyclic_group(4)
    assert generated_subgroup(Z4, {2}) == {0, 2}
    assert generated_subgroup(Z4, set()) == {0}


def test_transposition_and_three_cycle_generate_s3(S3):
    t = next(a for a in range(6) if S3.element_orders[a] == 2)
    c = next(a for a in range(6) if S3.element_orders[a] == 3)
    assert generated_subgroup(S3, {t, c}) == S3.full


def test_relative_centralizer(S3, A3):
    assert relative_centralizer(S3, S3.full, {0}) == {0}
    Z6 = cyclic_group(6)
    assert relative_centralizer(Z6, Z6.full, {0}) == Z6.full
    assert relative_centralizer(S3, A3, A3) == S3.full


def test_series_examples(S3, A3):
    low = group_series(cyclic_group(4), "lower-central")
    assert low.terms == [frozenset(range(4)), frozenset({0})]
    assert low.class_or_length == 1
    der = group_series(S3, "derived")
    assert der.terms == [S3.full, A3, frozenset({0})]
    assert der.class_or_length == 2
    up = group_series(S3, "upper-central")
    assert up.terms[:2] == [frozenset({0}), frozenset({0})]
    assert up.class_or_length is None


def test_nilpotency_solubility_examples(S3):
    assert nilpotency_solubility(cyclic_group(4)) == (1, 1)
    assert nilpotency_solubility(S3) == (None, 2)
    assert nilpotency_solubility(dihedral_group(4)) == (2, 2)
    assert nilpotency_solubility(quaternion_group()) == (2, 2)


def test_pi_decomposition(S3, A3):
    assert pi_decomposition(cyclic_group(6), {2}) == ({0, 3}, {0, 2, 4}, {0, 2, 4})
    pe, _, core = pi_decomposition(S3, {3})
    assert pe == A3
    assert core == {0}
    pe, _, core = pi_decomposition(dihedral_group(4), {2})
    assert pe == frozenset(range(8)) and core == {0}


@pytest.mark.parametrize(
    "G, size",
    [
        (cyclic_group(4), 2),
        (abelian_group(2, 2), 6),
        (symmetric_group(3), 6),
        (dihedral_group(4), 8),
        (quaternion_group(), 24),
        (abelian_group(2, 2, 2), 168),
        (cyclic_group(8), 4),
    ],
)
def test_automorphism_counts(G, size):
    auts = automorphism_group(G)
    assert len(auts) == size
    n = G.order
    for phi in auts[:10]:
        assert all(phi[G.table[a][b]] == G.table[phi[a]][phi[b]] for a in range(n) for b in range(n))


def test_holomorph_examples():
    Hol, _, _ = holomorph(cyclic_group(3))
    assert Hol.order == 6 and group_isomorphism(Hol, symmetric_group(3)) is not None
    assert holomorph(cyclic_group(2))[0].order == 2
    Hol, _, _ = holomorph(abelian_group(2, 2))
    assert Hol.order == 24 and group_isomorphism(Hol, symmetric_group(4)) is not None


def test_subgroups_match_naive_closure():
    for G in (symmetric_group(3), dihedral_group(4), quaternion_group(), abelian_group(2, 2, 2), cyclic_group(12)):
        assert set(subgroups(G)) == oracles.subgroups(G.table)


def test_center_commutator_quotient(S3, A3):
    D4 = dihedral_group(4)
    Z = center(D4)
    assert len(Z) == 2
    assert commutator_subgroup(S3, S3.full, S3.full) == A3
    assert is_normal(S3, A3)
    Q, proj = quotient_group(D4, Z)
    assert Q.order == 4 and Q.is_abelian
    assert all(proj[D4.table[a][b]] == Q.table[proj[a]][proj[b]] for a in range(8) for b in range(8))


small_groups = st.sampled_from([
    cyclic_group(6), symmetric_group(3), dihedral_group(4), quaternion_group(),
    abelian_group(2, 4), dihedral_group(5),
])


@st.composite
def relabelled(draw):
    G = draw(small_groups)
    rest = draw(st.permutations(list(range(1, G.order))))
    return G, (0, *rest)


@settings(max_examples=40, deadline=None)
@given(relabelled())
def test_relabelling_preserves_canonical_key(data):
    G, perm = data
    H = relabel_group(G, perm)
    assert H.canonical_key == G.canonical_key
    phi = group_isomorphism(G, H)
    assert phi is not None
    assert all(phi[G.table[a][b]] == H.table[phi[a]][phi[b]] for a in range(G.order) for b in range(G.order))
    # the backtracking route agrees with the canonical-form route
    assert find_group_isomorphism(G, H) is not None


def test_non_isomorphic_groups_have_distinct_keys():
    groups = [cyclic_group(8), abelian_group(2, 4), abelian_group(2, 2, 2), dihedral_group(4), quaternion_group()]
    for G, H in itertools.combinations(groups, 2):
        assert G.canonical_key != H.canonical_key
        assert group_isomorphism(G, H) is None
        assert find_group_isomorphism(G, H) is None

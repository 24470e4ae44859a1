import oracles
from conftest import tables
from skewbrace.brace import make_trivial_or_almost
from skewbrace.design import design_class, design_group, group_pi_nilpotent, verify_design_identities
from skewbrace.enumeration import enumerate_braces
from skewbrace.groups import abelian_group, cyclic_group, dihedral_group, group_isomorphism, symmetric_group
from skewbrace.series import descending_series, nilpotency_profile

CATALOG = [e.brace for n in range(1, 7) for e in enumerate_braces(n)]


def test_design_table_matches_definition():
    for B in CATALOG + [e.brace for e in enumerate_braces(8)][:10]:
        assert [list(r) for r in design_group(B).group.table] == oracles.design_table(*tables(B))


def test_design_examples(E4, AT6):
    T = make_trivial_or_almost(cyclic_group(2))
    G = design_group(T).group
    assert G.order == 4 and group_isomorphism(G, abelian_group(2, 2)) is not None
    assert design_group(E4).group.order == 16
    assert design_class(E4) == 2
    assert design_group(AT6).group.order == 36
    assert design_class(AT6) is None


def test_design_class_matches_naive_lower_central_series():
    for B in CATALOG:
        assert design_class(B) == oracles.nilpotency_class(oracles.design_table(*tables(B)))


def test_design_identities_hold(E4, AT6):
    for B in CATALOG + [E4, AT6]:
        rep = verify_design_identities(B)
        assert rep.ok, rep.failures


def test_at6_design_product(AT6, A3):
    D = design_group(AT6)
    t = next(a for a in range(6) if AT6.add.element_orders[a] == 2)
    GI, GJ = D.embed(A3), D.embed({0, t})
    prod = {D.group.table[x][y] for x in GI for y in GJ}
    assert prod == D.embed(AT6.full) and len(prod) == 36


def test_left_nilpotent_iff_design_nilpotent():
    for B in CATALOG + [e.brace for e in enumerate_braces(8)]:
        nil = nilpotency_profile(B)
        left = descending_series(B, "left").class_or_length is not None
        assert (left and nil.type_nilpotent) == (design_class(B) is not None)


def test_group_pi_nilpotent(S3):
    assert group_pi_nilpotent(S3, {3}) is None
    assert group_pi_nilpotent(S3, {2}) == 1
    assert group_pi_nilpotent(dihedral_group(4), {2}) == 2
    assert group_pi_nilpotent(symmetric_group(4), {2}) is None

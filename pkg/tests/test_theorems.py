import dataclasses

import pytest

from skewbrace.brace import SkewBrace
from skewbrace.enumeration import enumerate_braces
from skewbrace.errors import UnknownCheckId
from skewbrace.theorems import REGISTRY, Witness, check_theorems, fail, get_check, run_cell, summarize


def entries(*orders):
    return [(e.id, e.brace) for n in orders for e in enumerate_braces(n)]


def test_registry_shape():
    assert len(REGISTRY) >= 25
    for cid, chk in REGISTRY.items():
        assert chk.id == cid and chk.statement


def test_unknown_check():
    with pytest.raises(UnknownCheckId):
        get_check("nonexistent")
    with pytest.raises(UnknownCheckId):
        check_theorems(entries(2), ["nonexistent"])


@pytest.mark.parametrize("check_id", list(REGISTRY))
def test_each_check_passes_up_to_order_8(check_id):
    (s,) = check_theorems(entries(*range(1, 9)), [check_id])
    assert not s.failures, [(f.brace_id, f.witness) for f in s.failures]
    assert s.applicable > 0


def test_orders_9_and_10(monkeypatch):
    monkeypatch.setenv("SKB_MAX_ORDER", "10")
    summary = check_theorems(entries(9, 10))
    assert sum(len(s.failures) for s in summary) == 0


def test_order_12(monkeypatch):
    monkeypatch.setenv("SKB_MAX_ORDER", "12")
    summary = check_theorems(entries(12))
    assert sum(len(s.failures) for s in summary) == 0


def test_design_checks_on_at6(AT6):
    for cid in ("left-nilpotent-iff-design-nilpotent", "design-class-bound"):
        cell = run_cell(get_check(cid), "AT6", AT6)
        assert cell.status in ("pass", "skip")
    assert run_cell(get_check("left-nilpotent-iff-design-nilpotent"), "AT6", AT6).status == "pass"


def _corrupt(B: SkewBrace) -> SkewBrace:
    """B with every lambda_b (b != 0) replaced by negation, bypassing validation.

    Replacing lambda by the identity would not do: that yields the conjugation
    solution of (B, o), which satisfies the braid relation.
    """
    n = B.order
    neg = B.add.inverse
    lam = tuple(tuple(range(n)) if b == 0 else tuple(neg) for b in range(n))
    star = tuple(tuple(B.add.table[lam[a][x]][neg[x]] for x in range(n)) for a in range(n))
    return dataclasses.replace(B, lam=lam, star=star)


@pytest.mark.parametrize("check_id", ["axioms-relations", "star-identities", "braid-relation"])
def test_failures_carry_witnesses(E4, check_id):
    bad = _corrupt(E4)
    cell = run_cell(get_check(check_id), "bad", bad)
    assert cell.status == "fail"
    assert isinstance(cell.witness, Witness) and cell.witness.tag
    assert cell.witness.elements


def test_fail_helper_normalizes_parts():
    w = fail("term", 3, {2, 0}, [1, 4])
    assert w == Witness("term", ((3,), (0, 2), (1, 4)))
    assert w.as_dict() == {"tag": "term", "elements": [[3], [0, 2], [1, 4]]}


def test_summary_counts(E4, AT6):
    cells = [run_cell(get_check("socle-iff-right-nilpotent-type"), bid, B) for bid, B in (("e4", E4), ("at6", AT6))]
    (s,) = summarize(cells, ["socle-iff-right-nilpotent-type"])
    assert s.passed + s.skipped == 2 and not s.failures


def test_harness_is_deterministic():
    a = check_theorems(entries(4, 6))
    b = check_theorems(entries(4, 6))
    assert [(s.check_id, s.passed, s.skipped) for s in a] == [(s.check_id, s.passed, s.skipped) for s in b]

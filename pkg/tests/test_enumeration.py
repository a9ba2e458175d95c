from itertools import combinations

import pytest

from defram import (
    BudgetError,
    GraphClass,
    canonical_form,
    compute_ramsey_exhaustive,
    enumerate_class,
    enumerate_levels,
    make_graph,
    member,
    verify_value,
)

ALL = GraphClass.ALL


def _bruteforce_census(n: int) -> set[bytes]:
    pairs = list(combinations(range(n), 2))
    forms = set()
    for bits_ in range(1 << len(pairs)):
        edges = [e for idx, e in enumerate(pairs) if (bits_ >> idx) & 1]
        forms.add(canonical_form(make_graph(n, edges)))
    return forms


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)])
def test_enumeration_completeness_vs_bruteforce(n, count, all_levels_6):
    level = all_levels_6[n]
    assert len(level) == count
    if n <= 5:
        assert {canonical_form(g) for g in level} == _bruteforce_census(n)


def test_order_seven_count(all_levels_7):
    assert len(all_levels_7[7]) == 1044


def test_class_filtering_consistency(all_levels_6):
    for cls in (GraphClass.FOREST, GraphClass.CACTUS, GraphClass.BIPARTITE,
                GraphClass.SPLIT, GraphClass.COGRAPH):
        for n in range(7):
            own = enumerate_class(cls, n)
            filtered = [g for g in all_levels_6[n] if member(g, cls)]
            assert len(own) == len(filtered)
            assert ({canonical_form(g) for g in own}
                    == {canonical_form(g) for g in filtered})


def test_small_class_examples():
    assert len(enumerate_class(GraphClass.FOREST, 5)) == 10
    assert len(enumerate_class(GraphClass.COGRAPH, 4)) == 10
    assert len(enumerate_class(ALL, 4)) == 11


def test_determinism_and_parallel_merge():
    serial_a = enumerate_levels(GraphClass.BIPARTITE, 6)
    serial_b = enumerate_levels(GraphClass.BIPARTITE, 6)
    assert serial_a == serial_b
    parallel = enumerate_levels(GraphClass.BIPARTITE, 6, workers=2)
    assert parallel == serial_a


def test_budget_refusal():
    with pytest.raises(BudgetError):
        enumerate_class(ALL, 11)
    with pytest.raises(BudgetError):
        enumerate_class(GraphClass.FOREST, 13)
    assert len(enumerate_class(ALL, 8, budget=8)) == 12346


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("DEFRAM_BUDGET", "3")
    with pytest.raises(BudgetError):
        enumerate_class(ALL, 4)
    assert len(enumerate_class(ALL, 3)) == 4


def test_verify_value_examples():
    rep = verify_value(GraphClass.FOREST, 1, 4, 4, 5)
    assert rep.confirmed and rep.all_pass and not rep.counterexamples
    assert verify_value(GraphClass.SPLIT, 1, 4, 5, 7).confirmed
    assert verify_value(GraphClass.COGRAPH, 1, 4, 4, 5).confirmed


def test_verify_value_rejects_wrong_claims():
    rep = verify_value(GraphClass.FOREST, 1, 4, 4, 4)
    assert not rep.confirmed and not rep.all_pass
    assert rep.counterexamples
    rep = verify_value(GraphClass.FOREST, 1, 4, 4, 6)
    assert not rep.confirmed and rep.all_pass  # no order-5 counterexample
    assert rep.lower_witness is None


def test_compute_ramsey_exhaustive_examples():
    v = compute_ramsey_exhaustive(GraphClass.BIPARTITE, 1, 4, 4, 6)
    assert v is not None and v.value == 5 and v.provenance == "exhaustive"
    v = compute_ramsey_exhaustive(GraphClass.FOREST, 2, 5, 4, 6)
    assert v is not None and v.value == 5
    v = compute_ramsey_exhaustive(GraphClass.CACTUS, 1, 5, 4, 8)
    assert v is not None and v.value == 6
    assert compute_ramsey_exhaustive(GraphClass.COGRAPH, 1, 4, 5, 6) is None


def test_report_json_shape():
    rep = verify_value(GraphClass.COGRAPH, 1, 4, 4, 5)
    payload = rep.to_json()
    assert payload["class"] == "cograph" and payload["confirmed"] is True
    assert set(payload) >= {"order", "k", "i", "j", "examined", "all_pass",
                            "counterexamples", "lower_witness", "elapsed"}

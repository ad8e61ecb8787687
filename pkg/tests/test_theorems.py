import json

import pytest

from edgecrit import theorems
from edgecrit.graph import complete_graph, cycle_graph, from_graph6, octahedron_graph, petersen_graph
from edgecrit.theorems import (
    CHECKS,
    CSV_HEADER,
    GraphContext,
    Report,
    verify_broom_elementary,
    verify_broom_main,
    verify_fork_suite,
    verify_kierstead,
    verify_multifan,
    verify_overfull_suite,
    verify_splitting_suite,
    verify_val,
)

SPLIT_K4 = from_graph6("DNw")


def test_report_serialisation():
    rep = Report("val", "Dhc", checked=3, skipped=1, violations=["bad"], millis=12.6, notes=["n"])
    assert rep.csv_row() == "Dhc,val,3,1,1,0"
    assert rep.csv_row(timing=True) == "Dhc,val,3,1,1,13"
    data = json.loads(rep.to_json_line())
    assert data == {
        "graph6": "Dhc", "check": "val", "checked": 3, "skipped": 1,
        "violations": ["bad"], "millis": 0, "notes": ["n"],
    }
    assert not rep.ok
    assert CSV_HEADER.split(",") == ["graph6", "check", "checked", "skipped", "violations", "millis"]


def test_context_facts():
    ctx = GraphContext(cycle_graph(5))
    assert ctx.class_two and ctx.delta_critical and len(ctx.critical_edges) == 5
    k5 = GraphContext(complete_graph(5))
    assert k5.class_two and not k5.delta_critical and k5.critical_edges == frozenset()
    assert not GraphContext(complete_graph(4)).class_two
    with pytest.raises(ValueError):
        GraphContext(cycle_graph(5), budget=-1)


def test_context_colorings_leave_exactly_one_edge_blank():
    ctx = GraphContext(SPLIT_K4)
    for e in SPLIT_K4.edges:
        cols = list(ctx.colorings(e))
        assert cols
        for col in cols:
            assert col.uncolored_edges() == [e] and col.is_proper()


def test_budget_sampling_is_noted_and_seeded():
    g = from_graph6("FN~~w")
    ctx = GraphContext(g, budget=1, seed=7)
    rep = verify_multifan(g, ctx=ctx)
    assert ctx.sampling_notes() and "seed=7" in ctx.sampling_notes()[0]
    again = verify_multifan(g, budget=1, seed=7)
    assert (rep.checked, rep.skipped) == (again.checked, again.skipped)


@pytest.mark.parametrize("name", list(CHECKS))
@pytest.mark.parametrize("g6", ["Bw", "Dhc", "DNw", "D^{", "FN~~w"])
def test_checks_pass_on_critical_graphs(name, g6):
    rep = CHECKS[name](from_graph6(g6))
    assert rep.check == name and rep.graph6 == g6
    assert rep.violations == []


@pytest.mark.parametrize("name", list(CHECKS))
def test_class_one_graphs_are_skipped_not_checked(name):
    rep = CHECKS[name](petersen_graph().remove_vertex(0))
    assert rep.violations == []


def test_known_counts_on_c5():
    g = cycle_graph(5)
    assert verify_val(g).csv_row() == "Dhc,val,10,0,0,0"
    assert verify_multifan(g).checked == 10
    assert verify_kierstead(g).checked == 10
    assert verify_broom_main(g).checked == 10


def test_splitting_dense_regular_graphs():
    assert verify_splitting_suite(complete_graph(4)).checked == 12
    rep = verify_splitting_suite(octahedron_graph())
    assert rep.violations == [] and rep.checked >= 42


def test_maximal_mode_checks_fewer_brooms():
    g = from_graph6("FN~~w")
    every = verify_broom_main(g, mode="all")
    maximal = verify_broom_main(g, mode="maximal")
    assert 0 < maximal.checked <= every.checked
    assert every.ok and maximal.ok


def test_broom_elementary_reports_both_readings():
    rep = verify_broom_elementary(SPLIT_K4)
    assert rep.ok and any("across handles" in n for n in rep.notes)


def test_overfull_and_fork_suites_on_dense_critical_graph():
    g = from_graph6("FN~~w")
    assert verify_overfull_suite(g).ok
    assert verify_fork_suite(g).ok
    assert verify_fork_suite(g, universal=True).ok


# fault injection: a check must be able to fail


def test_broom_check_reports_injected_excess(monkeypatch):
    monkeypatch.setattr(theorems, "broom_excess", lambda col, vs: 2)
    rep = verify_broom_main(cycle_graph(5))
    assert len(rep.violations) == rep.checked == 10
    assert "excess=2" in rep.violations[0] and "coloring=" in rep.violations[0]


def test_kierstead_check_reports_injected_overlap(monkeypatch):
    from edgecrit.coloring import Coloring

    monkeypatch.setattr(Coloring, "is_elementary", lambda self, vs: False)
    assert not verify_kierstead(SPLIT_K4).ok
    assert not verify_multifan(SPLIT_K4).ok


def test_splitting_check_reports_injected_non_critical(monkeypatch):
    monkeypatch.setattr(theorems, "is_delta_critical", lambda g: False)
    rep = verify_splitting_suite(complete_graph(4))
    assert len(rep.violations) == 12 and "not critical" in rep.violations[0]

"""Smoke tests for the Python bindings."""

import json

import pytest

import ktdom


def test_graph_basics():
    g = ktdom.build_harary(3, 6)
    assert g.order() == 6
    assert g.edge_count() == 9
    assert g.degree(0) == 3
    assert g.adjacent(0, 3)
    assert not g.adjacent(0, 2)
    text = ktdom.format_edge_list(g)
    assert text.startswith("p tds 6 9\n")
    back = ktdom.parse_edge_list(text)
    assert back.edges() == g.edges()


def test_parameter_errors_become_value_errors():
    with pytest.raises(ValueError):
        ktdom.build_harary(6, 5)
    with pytest.raises(ValueError):
        ktdom.build_harary(1, 5)


def test_domination_queries():
    g = ktdom.build_harary(3, 6)
    s = ktdom.VertexSet.from_labels([1, 2, 4, 5], 6)
    assert ktdom.is_ktds(g, s, 2)
    assert ktdom.coverage(g, s) == [2, 2, 2, 2, 2, 2]
    b = ktdom.lower_bounds(g, 2)
    assert (b.lb_trivial, b.lb_degree, b.lb_degree_sum) == (3, 4, 4)
    with pytest.raises(RuntimeError):
        ktdom.lower_bounds(ktdom.build_harary(2, 6), 3)


def test_classify_and_construct():
    c = ktdom.classify(3, 5)
    assert c.claim.kind == ktdom.ClaimKind.BRACKET
    assert (c.claim.lo, c.claim.hi) == (3, 4)
    results = ktdom.construct_2tds(3, 6)
    assert len(results) == 1
    assert results[0].validated
    assert results[0].set.labels() == [1, 2, 4, 5]
    assert ktdom.formula_name(results[0].id) == "T23_R0"


def test_solver():
    g = ktdom.build_harary(3, 5)
    res = ktdom.solve_exact(g, 2, ktdom.SolveMethod.BRUTE)
    assert res.resolved and res.gamma == 3
    assert res.witness.labels() == [1, 2, 3]
    assert ktdom.cross_check(g, 2)
    shifted = ktdom.translate_set(g, res.witness, 1)
    assert shifted.labels() == [2, 3, 4]


def test_reports_and_sweep():
    rep = ktdom.evaluate_instance(4, 8, 2)
    assert rep.verdict == ktdom.Verdict.CLAIM_CONTRADICTED
    doc = json.loads(rep.to_json())
    assert doc["oracle"]["gamma"] == 4
    again = ktdom.report_from_json(rep.to_json())
    assert again.to_json() == rep.to_json()

    result = ktdom.sweep(2, 3, 4, 6)
    assert [(r.params.d, r.params.n) for r in result.reports] == [
        (2, 4),
        (3, 4),
        (2, 5),
        (3, 5),
        (2, 6),
        (3, 6),
    ]
    csv = ktdom.sweep_to_csv(result, include_timing=False)
    assert csv.splitlines()[0].startswith("d,n,k,")

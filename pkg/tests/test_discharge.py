"""Discharging-ledger tests.

A ledger starts every vertex at degree minus beta, applies the ruleset's
transfers, and must conserve the total 2|E| - beta|V| exactly (rational
arithmetic, no floats).  The k6 ruleset additionally replays the
inner redistribution inside each low-degree component, whose final
charges must sum to that component's count of 3_0-vertices.
"""

from fractions import Fraction

import pytest
from hypothesis import given

from signedhom import discharge_audit, subdivided_k4
from signedhom.core import SignedGraph

from strategies import signed_graphs


def transfer_triples(report):
    return [(t.giver, t.receiver, t.amount, t.rule) for t in report.transfers]


def test_figure_six_ledger():
    report = discharge_audit(subdivided_k4(), "k6")
    fifth = Fraction(1, 5)
    assert report.beta == Fraction(14, 5)
    assert dict(report.initial) == {
        1: fifth,
        2: fifth,
        3: fifth,
        4: fifth,
        5: Fraction(-4, 5),
    }
    # no vertex of degree >= 4, so the outer rules never fire
    assert report.transfers == ()
    assert report.final == report.initial
    assert report.total == 0
    assert report.conserved

    [comp] = report.components
    assert comp.vertices == (1, 2, 3, 4, 5)
    assert (comp.n0, comp.n1) == (2, 2)
    quarter = Fraction(1, 4)
    assert [
        (t.giver, t.receiver, t.amount, t.rule) for t in comp.inner_transfers
    ] == [
        (1, 3, quarter, "inner-neighbor"),
        (2, 3, quarter, "inner-neighbor"),
        (1, 4, quarter, "inner-neighbor"),
        (2, 4, quarter, "inner-neighbor"),
    ]
    half = Fraction(1, 2)
    assert dict(comp.inner_final) == {1: half, 2: half, 3: half, 4: half, 5: 0}
    assert comp.inner_total == comp.n0 == 2


def test_hub_pays_its_weak_three_neighbors():
    # degree-4 hub adjacent to two 3_1-vertices: 1/5 each
    g = SignedGraph(
        6,
        [(1, 2, 1), (1, 3, 1), (1, 4, 1), (1, 5, 1), (2, 3, 1), (2, 6, 1), (3, 6, 1)],
    )
    report = discharge_audit(g, "k6")
    fifth = Fraction(1, 5)
    assert transfer_triples(report) == [
        (1, 2, fifth, "3_1-neighbor"),
        (1, 3, fifth, "3_1-neighbor"),
    ]
    final = dict(report.final)
    assert final[1] == Fraction(4, 5)
    assert final[2] == final[3] == Fraction(2, 5)
    assert report.conserved


def test_hub_pays_its_two_neighbors_more():
    # degree-4 hub adjacent to two 2-vertices: 2/5 each
    g = SignedGraph(5, [(1, 2, 1), (1, 3, 1), (1, 4, 1), (1, 5, 1), (2, 3, 1)])
    report = discharge_audit(g, "k6")
    two_fifths = Fraction(2, 5)
    assert transfer_triples(report) == [
        (1, 2, two_fifths, "2-neighbor"),
        (1, 3, two_fifths, "2-neighbor"),
    ]
    assert dict(report.final)[1] == two_fifths
    assert report.total == Fraction(-4)


def test_k8_rule_feeds_two_vertices_from_both_sides():
    report = discharge_audit(SignedGraph(3, [(1, 2, 1), (2, 3, -1)]), "k8")
    half = Fraction(1, 2)
    assert dict(report.initial) == {1: -2, 2: -1, 3: -2}
    assert transfer_triples(report) == [
        (1, 2, half, "2-vertex"),
        (3, 2, half, "2-vertex"),
    ]
    assert dict(report.final) == {1: Fraction(-5, 2), 2: 0, 3: Fraction(-5, 2)}
    assert report.total == -5
    assert report.conserved


def test_complete_graph_sits_exactly_on_the_k8_bound():
    k4 = SignedGraph(4, [(a, b, 1) for a in range(1, 5) for b in range(a + 1, 5)])
    report = discharge_audit(k4, "k8")
    assert all(c == 0 for _, c in report.initial)
    assert all(c == 0 for _, c in report.final)
    assert report.transfers == ()
    [comp] = report.components
    assert (comp.n0, comp.n1) == (4, 0)
    # k8 audits skip the inner redistribution
    assert comp.inner_final == ()


@pytest.mark.parametrize("ruleset", ["k6", "k8"])
@given(g=signed_graphs(min_n=1, max_n=7))
def test_total_charge_is_conserved(ruleset, g):
    report = discharge_audit(g, ruleset)
    assert report.conserved
    assert report.total == 2 * g.m - report.beta * g.n


@given(g=signed_graphs(min_n=1, max_n=7))
def test_transfers_account_for_every_change(g):
    report = discharge_audit(g, "k6")
    charge = dict(report.initial)
    for t in report.transfers:
        charge[t.giver] -= t.amount
        charge[t.receiver] += t.amount
    assert charge == dict(report.final)


@given(g=signed_graphs(min_n=1, max_n=7))
def test_inner_totals_match_their_components(g):
    for comp in discharge_audit(g, "k6").components:
        assert comp.inner_total == comp.n0
        given_away = {v for v, f in comp.inner_final if f < 0}
        assert not given_away  # inner charges never go negative


def test_unknown_ruleset_rejected():
    with pytest.raises(ValueError, match="unknown ruleset"):
        discharge_audit(subdivided_k4(), "k7")

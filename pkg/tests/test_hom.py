"""Solvers: SP / switch / list homomorphisms, enumeration, folding.

The reference point throughout is a brute-force search over all |C|^n
mappings (and, for the switching variants, all 2^n switch sets), kept
deliberately dumb so the two implementations share nothing.
"""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from signedhom import (
    BudgetExceeded,
    SignedGraph,
    SolveOptions,
    admissible_sets,
    apex_cycle,
    builtin_target,
    classify_set,
    custom_space,
    dsg_space,
    enumerate_homs,
    fold_bipartite,
    forbidden_set,
    k2km_space,
    list_sp_hom,
    sp_hom,
    subdivided_k4,
    switch,
    switch_hom,
)
from strategies import graphs_with_switch_sets, signed_graphs

K6M = builtin_target("k6m")
DK6M = dsg_space(k2km_space(3))


def colors(*names: str) -> frozenset[int]:
    return frozenset(DK6M.color_named(x) for x in names)


def brute_sp(g: SignedGraph, t) -> dict[int, int] | None:
    tg = t.graph
    for image in itertools.product(range(1, tg.n + 1), repeat=g.n):
        f = {v: image[v - 1] for v in g.vertices()}
        if all(tg.sign_of.get((f[u], f[v])) == s for u, v, s in g.edges):
            return f
    return None


def brute_switch(g: SignedGraph, t) -> bool:
    return any(
        brute_sp(switch(g, set(x)), t) is not None
        for r in range(g.n + 1)
        for x in itertools.combinations(g.vertices(), r)
    )


def valid_sp(g: SignedGraph, t, mapping: dict[int, int]) -> bool:
    return all(t.graph.sign_of.get((mapping[u], mapping[v])) == s for u, v, s in g.edges)


# --- forbidden sets ----------------------------------------------------------


def test_forbidden_set_worked_examples():
    assert forbidden_set(DK6M, 1, colors("1+", "2+", "3-")) == colors(
        "1+", "2+", "3-", "4-"
    )
    assert forbidden_set(DK6M, 1, colors("1+")) == colors(
        "1+", "2+", "1-", "3-", "4-", "5-", "6-"
    )
    for eight in DK6M.algebra.paired_sets(8):
        assert forbidden_set(DK6M, 1, eight) == frozenset()
        assert forbidden_set(DK6M, -1, eight) == frozenset()


@given(st.sets(st.integers(1, 12)), st.sampled_from((1, -1)))
def test_forbidden_set_against_definition(neighbor_list, sign):
    got = forbidden_set(DK6M, sign, neighbor_list)
    tg = DK6M.graph
    for c in range(1, 13):
        compatible = any(tg.sign_of.get((c, d)) == sign for d in neighbor_list)
        assert (c in got) == (not compatible)


# --- SP solver vs brute force -------------------------------------------------


def test_sp_triangle_cases():
    plus = SignedGraph(3, [(1, 2, 1), (2, 3, 1), (1, 3, 1)])
    assert sp_hom(plus, K6M).found
    two_neg = SignedGraph(3, [(1, 2, -1), (2, 3, -1), (1, 3, 1)])
    assert not sp_hom(two_neg, K6M).found
    single = SignedGraph(2, [(1, 2, -1)])
    result = sp_hom(single, K6M, SolveOptions(canonical=True))
    assert result.mapping == {1: 1, 2: 2}


@given(signed_graphs(max_n=4))
@settings(max_examples=60, deadline=None)
def test_sp_agrees_with_brute_force(g):
    result = sp_hom(g, K6M)
    assert result.found == (brute_sp(g, K6M) is not None)
    if result.found:
        assert valid_sp(g, K6M, result.mapping)


@given(signed_graphs(max_n=3))
@settings(max_examples=25, deadline=None)
def test_sp_into_doubled_target_agrees_with_brute_force(g):
    result = sp_hom(g, DK6M)
    assert result.found == (brute_sp(g, DK6M) is not None)


@given(signed_graphs(max_n=4))
@settings(max_examples=30, deadline=None)
def test_canonical_mapping_is_the_least_one(g):
    result = sp_hom(g, K6M, SolveOptions(canonical=True))
    brute_best = None
    for image in itertools.product(range(1, 7), repeat=g.n):
        f = {v: image[v - 1] for v in g.vertices()}
        if valid_sp(g, K6M, f):
            brute_best = f
            break
    if brute_best is None:
        assert not result.found
    else:
        assert result.mapping == brute_best


# --- switch solver ------------------------------------------------------------


def test_switch_hom_fixed_cases():
    assert not switch_hom(subdivided_k4(), K6M).found

    two_neg_at_3 = SignedGraph(3, [(1, 3, -1), (2, 3, -1), (1, 2, 1)])
    result = switch_hom(two_neg_at_3, K6M)
    assert result.found
    assert result.switch_set in ({3}, {1, 2})

    g = SignedGraph(4, [(1, 2, 1), (2, 3, -1), (3, 4, 1), (1, 4, -1)])
    assert switch_hom(g, custom_space(g, "self")).found


@given(signed_graphs(max_n=4))
@settings(max_examples=40, deadline=None)
def test_switch_agrees_with_brute_force(g):
    result = switch_hom(g, K6M)
    assert result.found == brute_switch(g, K6M)
    if result.found:
        assert valid_sp(switch(g, result.switch_set), K6M, result.mapping)
        assert result.stats.girth_checked


@given(graphs_with_switch_sets(max_n=5))
@settings(max_examples=40, deadline=None)
def test_switch_status_is_switching_invariant(gx):
    g, x = gx
    assert switch_hom(g, K6M).found == switch_hom(switch(g, x), K6M).found


def test_budget_exhaustion_is_an_error_not_a_none():
    g = apex_cycle(5)
    with pytest.raises(BudgetExceeded):
        switch_hom(g, builtin_target("k10m"), SolveOptions(max_nodes=5))


# --- list solver ----------------------------------------------------------------


def test_empty_list_means_none():
    g = SignedGraph(2, [(1, 2, 1)])
    assert not list_sp_hom(g, DK6M, {1: frozenset()}).found


def test_positive_two_path_same_layer_opposite_sides_fails():
    path = SignedGraph(3, [(1, 2, 1), (2, 3, 1)])  # x - z - y with z = vertex 2
    lists = {1: colors("1+"), 3: colors("2-")}
    assert not list_sp_hom(path, DK6M, lists).found


def test_found_list_solutions_respect_their_lists():
    g = SignedGraph(3, [(1, 2, 1), (2, 3, -1)])
    lists = {1: colors("1+", "4-"), 2: colors("3+", "2-"), 3: colors("5+", "6+", "1-")}
    result = list_sp_hom(g, DK6M, lists)
    assert result.found
    for v, cs in lists.items():
        assert result.mapping[v] in cs


@given(signed_graphs(max_n=3), st.data())
@settings(max_examples=30, deadline=None)
def test_list_results_are_switching_covariant(g, data):
    lists = {
        v: frozenset(data.draw(st.sets(st.integers(1, 12)), label=f"L({v})"))
        for v in g.vertices()
    }
    x = data.draw(st.sets(st.integers(1, g.n)), label="X")
    switched_lists = {
        v: DK6M.algebra.inverse_set(l) if v in x else l for v, l in lists.items()
    }
    plain = list_sp_hom(g, DK6M, lists)
    covariant = list_sp_hom(switch(g, frozenset(x)), DK6M, switched_lists)
    assert plain.found == covariant.found


# --- admissible lists on trees ---------------------------------------------------


def test_admissible_on_a_precolored_path():
    #  v(1) - v1(2) - v2(3), only the far end precolored
    g = SignedGraph(3, [(1, 2, 1), (2, 3, 1)])
    lists = {3: colors("4-")}
    adm = admissible_sets(g, 1, lists, DK6M)
    d = classify_set(DK6M.algebra, adm[1])
    assert d.paired and d.size == 10


def test_admissible_on_the_deep_tree_with_two_precolored_leaves():
    # root(1) - 2; 2 - leaf 4 and 2 - 3; 3 - leaf 5; both leaves precolored
    g = SignedGraph(5, [(1, 2, 1), (2, 3, -1), (2, 4, 1), (3, 5, 1)])
    lists = {4: colors("2+"), 5: colors("5-")}
    adm = admissible_sets(g, 1, lists, DK6M)
    assert len(adm[1]) >= 8


def test_admissible_isolated_root():
    g = SignedGraph(1, [])
    s = colors("1+", "3-")
    assert admissible_sets(g, 1, {1: s}, DK6M)[1] == s


def test_admissible_rejects_cycles():
    g = SignedGraph(3, [(1, 2, 1), (2, 3, 1), (1, 3, 1)])
    with pytest.raises(ValueError):
        admissible_sets(g, 1, {}, DK6M)


@given(signed_graphs(max_n=4))
@settings(max_examples=30, deadline=None)
def test_admissible_root_set_is_exactly_the_solvable_precolors(g):
    if g.m != g.n - 1 or len(g.components()) != 1:
        return  # only trees
    adm = admissible_sets(g, 1, {}, DK6M)
    for c in range(1, 13):
        expected = list_sp_hom(g, DK6M, {1: {c}}).found
        assert (c in adm[1]) == expected


# --- enumeration ----------------------------------------------------------------


def test_enumerate_counts_both_edge_mappings():
    edge = SignedGraph(2, [(1, 2, 1)])
    k2 = custom_space(SignedGraph(2, [(1, 2, 1)]), "k2")
    outcome = enumerate_homs(edge, k2, mode="SP")
    assert [r.mapping for r in outcome.results] == [{1: 1, 2: 2}, {1: 2, 2: 1}]
    assert outcome.complete


def test_enumerate_triangle_count_matches_target_triangle_count():
    plus = SignedGraph(3, [(1, 2, 1), (2, 3, 1), (1, 3, 1)])
    outcome = enumerate_homs(plus, K6M, mode="SP")
    ordered_positive_triangles = sum(
        1
        for image in itertools.permutations(range(1, 7), 3)
        if all(
            K6M.graph.sign_of.get((image[i], image[j])) == 1
            for i in range(3)
            for j in range(i + 1, 3)
        )
    )
    assert len(outcome.results) == ordered_positive_triangles == 48


def test_enumerate_respects_cap_and_reports_truncation():
    plus = SignedGraph(3, [(1, 2, 1), (2, 3, 1), (1, 3, 1)])
    outcome = enumerate_homs(plus, K6M, mode="SP", cap=10)
    assert len(outcome.results) == 10 and not outcome.complete


@given(signed_graphs(max_n=3))
@settings(max_examples=25, deadline=None)
def test_enumeration_is_exhaustive_and_canonically_ordered(g):
    outcome = enumerate_homs(g, K6M, mode="SP")
    brute = []
    for image in itertools.product(range(1, 7), repeat=g.n):
        f = {v: image[v - 1] for v in g.vertices()}
        if valid_sp(g, K6M, f):
            brute.append(f)
    assert [r.mapping for r in outcome.results] == brute


# --- bipartite folding -------------------------------------------------------------


def test_fold_keeps_part_respecting_mappings():
    c4 = SignedGraph(4, [(1, 2, -1), (2, 3, 1), (3, 4, 1), (1, 4, 1)])
    parts = ((1, 3), (2, 4))
    mapping = {1: 1, 2: 2, 3: 3, 4: 6}  # first part odd images, second part even
    assert valid_sp(c4, K6M, mapping)
    folded = fold_bipartite(c4, parts, mapping, 3)
    # nothing re-matched, only renumbered: odd 2i-1 -> a_i = i, even 2i -> b_i = 3+i
    assert folded == {1: 1, 2: 4, 3: 2, 4: 6}


def test_fold_after_solving_lands_in_the_bipartite_target():
    c4 = SignedGraph(4, [(1, 2, -1), (2, 3, 1), (3, 4, 1), (1, 4, 1)])
    result = switch_hom(c4, K6M)
    assert result.found
    folded = fold_bipartite(
        c4, ((1, 3), (2, 4)), result.mapping, 3, result.switch_set
    )
    k33m = builtin_target("k33m")
    switched = switch(c4, result.switch_set)
    assert valid_sp(switched, k33m, folded)
    assert all(folded[v] in (1, 2, 3) for v in (1, 3))
    assert all(folded[v] in (4, 5, 6) for v in (2, 4))


def test_fold_rejects_odd_cycles():
    c3 = SignedGraph(3, [(1, 2, 1), (2, 3, 1), (1, 3, 1)])
    with pytest.raises(ValueError):
        fold_bipartite(c3, ((1, 3), (2,)), {1: 1, 2: 3, 3: 5}, 3)

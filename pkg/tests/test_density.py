"""Exact maximum average degree against exhaustive subset enumeration."""

from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings

from signedhom import SignedGraph, apex_cycle, mad, mad_less_than, subdivided_k4
from strategies import signed_graphs, trees


def brute_mad(g: SignedGraph) -> Fraction:
    best = Fraction(0)
    for r in range(1, g.n + 1):
        for sub in itertools.combinations(g.vertices(), r):
            inside = set(sub)
            e = sum(1 for u, v, _ in g.edges if u in inside and v in inside)
            best = max(best, Fraction(2 * e, r))
    return best


def density_of(g: SignedGraph, vertices: frozenset[int]) -> Fraction:
    e = sum(1 for u, v, _ in g.edges if u in vertices and v in vertices)
    return Fraction(2 * e, len(vertices))


def test_fixed_values():
    cert = mad(subdivided_k4())
    assert cert.value == Fraction(14, 5)
    assert cert.witness == frozenset({1, 2, 3, 4, 5})
    cert = mad(apex_cycle(3))
    assert cert.value == 3
    assert cert.witness == frozenset(range(1, 7))


@given(trees())
def test_tree_density_is_closed_form(t):
    assert mad(t).value == Fraction(2 * (t.n - 1), t.n)


@given(signed_graphs(max_n=7))
@settings(max_examples=60, deadline=None)
def test_agrees_with_subset_enumeration(g):
    cert = mad(g)
    assert cert.value == brute_mad(g)
    assert density_of(g, cert.witness) == cert.value


@given(signed_graphs(min_n=2, max_n=7))
@settings(max_examples=40, deadline=None)
def test_monotone_and_above_average_degree(g):
    value = mad(g).value
    assert value >= Fraction(2 * g.m, g.n)
    sub = g.induced(frozenset(range(1, g.n)))
    if sub.n:
        assert mad(sub).value <= value


def test_empty_graph_is_rejected():
    with pytest.raises(ValueError):
        mad(SignedGraph(0, []))


def test_bound_decisions():
    holds, violation = mad_less_than(subdivided_k4(), Fraction(14, 5))
    assert not holds
    assert density_of(subdivided_k4(), violation) >= Fraction(14, 5)

    c7 = SignedGraph(7, [(i, i % 7 + 1, 1) for i in range(1, 8)])
    holds, violation = mad_less_than(c7, Fraction(14, 5))
    assert holds and violation is None

    k4 = SignedGraph(4, [(u, v, 1) for u in range(1, 5) for v in range(u + 1, 5)])
    holds, violation = mad_less_than(k4, Fraction(3))
    assert not holds and density_of(k4, violation) >= 3

    with pytest.raises(ValueError):
        mad_less_than(c7, Fraction(0))


@given(signed_graphs(max_n=6))
@settings(max_examples=30, deadline=None)
def test_bound_decision_consistent_with_mad(g):
    value = mad(g).value
    for bound in (Fraction(14, 5), Fraction(3), value):
        if bound <= 0:
            continue
        holds, violation = mad_less_than(g, bound)
        assert holds == (value < bound)
        if not holds:
            assert density_of(g, violation) >= bound

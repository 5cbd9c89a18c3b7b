"""Constructed example graphs and the edge-expansion coloring gadget."""

from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings

from signedhom import (
    SignedGraph,
    apex_cycle,
    builtin_gadget,
    builtin_target,
    coloring_gadget,
    mad,
    signed_cube,
    subdivided_k4,
    switch_hom,
    walk_sign,
)
from strategies import signed_graphs


def bipartition(g: SignedGraph) -> tuple[set[int], set[int]] | None:
    side: dict[int, int] = {}
    for start in g.vertices():
        if start in side:
            continue
        side[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w, _ in g.adjacency[v]:
                if w not in side:
                    side[w] = side[v] ^ 1
                    stack.append(w)
                elif side[w] == side[v]:
                    return None
    return (
        {v for v, s in side.items() if s == 0},
        {v for v, s in side.items() if s == 1},
    )


def test_threshold_graph_shape():
    g = subdivided_k4()
    assert (g.n, g.m) == (5, 7)
    assert sorted(g.degree(v) for v in g.vertices()) == [2, 3, 3, 3, 3]
    negatives = [(u, v) for u, v, s in g.edges if s < 0]
    assert len(negatives) == 1
    (u, v), = negatives
    assert 2 in (g.degree(u), g.degree(v))  # the negative edge touches the 2-vertex
    assert mad(g).value == Fraction(14, 5)
    assert not switch_hom(g, builtin_target("k6m")).found


def test_cube_shape():
    g = signed_cube()
    assert (g.n, g.m) == (8, 12)
    assert all(g.degree(v) == 3 for v in g.vertices())
    assert bipartition(g) is not None
    assert sum(1 for *_, s in g.edges if s < 0) == 3


def test_cube_same_part_pairs_share_a_negative_quadrilateral():
    g = signed_cube()
    parts = bipartition(g)
    quads = [
        cycle
        for cycle in _all_four_cycles(g)
        if walk_sign(g, cycle + [cycle[0]]) == -1
    ]
    for part in parts:
        for a, b in itertools.combinations(sorted(part), 2):
            assert any(a in q and b in q for q in quads), (a, b)


def _all_four_cycles(g: SignedGraph) -> list[list[int]]:
    out = []
    for quad in itertools.combinations(g.vertices(), 4):
        for perm in itertools.permutations(quad[1:]):
            cycle = [quad[0], *perm]
            if cycle[1] > cycle[3]:
                continue  # orientation dedup
            if all(
                g.has_edge(cycle[i], cycle[(i + 1) % 4]) for i in range(4)
            ):
                out.append(cycle)
    return out


@pytest.mark.parametrize("l", [3, 4, 5, 6])
def test_apex_cycle_shape(l):
    g = apex_cycle(l)
    assert (g.n, g.m) == (2 * l, 3 * l)
    base = list(range(1, l + 1))
    assert walk_sign(g, base + [1]) == -1  # the base cycle is negative
    for i in range(1, l + 1):
        j = i % l + 1
        apex = l + i
        assert walk_sign(g, [i, j, apex, i]) == 1  # every raised triangle positive


def test_apex_cycle_density_and_range():
    for l in (3, 4, 5):
        assert mad(apex_cycle(l)).value == 3
    with pytest.raises(ValueError):
        apex_cycle(2)


def test_gadget_on_a_single_edge():
    s = coloring_gadget(SignedGraph(2, [(1, 2, 1)]))
    assert (s.n, s.m) == (4, 4)
    assert sum(1 for *_, sign in s.edges if sign < 0) == 1
    assert walk_sign(s, [1, 3, 2, 4, 1]) == -1


def test_gadget_on_a_triangle():
    s = coloring_gadget(SignedGraph(3, [(1, 2, 1), (1, 3, 1), (2, 3, 1)]))
    assert (s.n, s.m) == (9, 12)
    assert bipartition(s) is not None


def test_gadget_ignores_input_signs():
    pos = coloring_gadget(SignedGraph(3, [(1, 2, 1), (2, 3, 1)]))
    neg = coloring_gadget(SignedGraph(3, [(1, 2, -1), (2, 3, -1)]))
    assert pos.edges == neg.edges


def test_gadget_encodes_four_colorability():
    k4 = SignedGraph(4, [(u, v, 1) for u in range(1, 5) for v in range(u + 1, 5)])
    s = coloring_gadget(k4)
    assert switch_hom(s, builtin_target("k8m")).found
    assert not switch_hom(s, builtin_target("k6m")).found


@given(signed_graphs(max_n=5))
@settings(max_examples=30, deadline=None)
def test_gadget_output_is_bipartite_with_negative_quadrilaterals(g):
    s = coloring_gadget(g)
    assert (s.n, s.m) == (g.n + 2 * g.m, 4 * g.m)
    assert bipartition(s) is not None
    for j, (u, v, _) in enumerate(g.edges, start=1):
        x, y = g.n + 2 * j - 1, g.n + 2 * j
        assert walk_sign(s, [u, x, v, y, u]) == -1


def test_builtin_gadget_names():
    assert builtin_gadget("subdivided-k4").edges == subdivided_k4().edges
    assert builtin_gadget("apex-cycle:4").edges == apex_cycle(4).edges
    assert builtin_gadget("signed-cube").n == 8
    assert builtin_gadget("unknown") is None

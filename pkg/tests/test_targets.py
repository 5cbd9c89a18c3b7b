"""Target constructors, the doubled-space color algebra, shape families."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given
import hypothesis.strategies as st

from signedhom import (
    builtin_target,
    classify_set,
    dsg,
    dsg_space,
    k2km_space,
    kkkm_space,
    make_k2k_m,
    make_kkk_m,
    girth_vector,
    INFINITY,
    SignedGraph,
    walk_sign,
)

K6M_DOUBLED = dsg_space(k2km_space(3))


def colors(*names: str) -> frozenset[int]:
    return frozenset(K6M_DOUBLED.color_named(x) for x in names)


# --- constructors -----------------------------------------------------------


@pytest.mark.parametrize(
    "k,n,m,negatives",
    [(1, 2, 1, 1), (3, 6, 15, 3), (4, 8, 28, 4)],
)
def test_complete_matching_targets(k, n, m, negatives):
    g = make_k2k_m(k)
    assert (g.n, g.m) == (n, m)
    neg = [(u, v) for u, v, s in g.edges if s < 0]
    assert len(neg) == negatives
    assert neg == [(2 * i - 1, 2 * i) for i in range(1, k + 1)]


def test_bipartite_matching_targets():
    g = make_kkk_m(3)
    assert (g.n, g.m) == (6, 9)
    assert [(u, v) for u, v, s in g.edges if s < 0] == [(1, 4), (2, 5), (3, 6)]
    assert girth_vector(make_kkk_m(4)).as_tuple() == (2, INFINITY, 4, INFINITY)


def test_constructor_ranges():
    with pytest.raises(ValueError):
        make_k2k_m(0)
    with pytest.raises(ValueError):
        make_kkk_m(1)


def test_builtin_target_names():
    assert builtin_target("k6m").graph.edges == make_k2k_m(3).edges
    assert builtin_target("k2km:5").graph.n == 10
    assert builtin_target("k33m").graph.edges == make_kkk_m(3).edges
    assert builtin_target("dsg:k6m").graph.edges == dsg(make_k2k_m(3)).edges
    assert builtin_target("no-such-target") is None


# --- doubling ---------------------------------------------------------------


def test_doubling_a_single_positive_edge():
    d = dsg(SignedGraph(2, [(1, 2, 1)]))
    assert (d.n, d.m) == (4, 4)
    # around the unique 4-cycle 1+,2+,1-,2- the signs alternate +,-,+,-
    cycle = [1, 2, 3, 4, 1]
    signs = [d.sign_of[(cycle[i], cycle[i + 1])] for i in range(4)]
    assert signs == [1, -1, 1, -1]
    assert walk_sign(d, cycle) == 1
    assert not d.has_edge(1, 3) and not d.has_edge(2, 4)


def test_doubling_k6m_counts_and_neighborhoods():
    d = dsg(make_k2k_m(3))
    assert (d.n, d.m) == (12, 60)
    assert all(d.degree(v) == 10 for v in d.vertices())
    positive_nbrs = frozenset(w for w, s in d.adjacency[12] if s > 0)
    assert positive_nbrs == colors("1-", "2-", "3-", "4-", "5+")


@given(st.integers(2, 5))
def test_doubling_restricted_to_plus_side_is_the_base(k):
    base = make_k2k_m(k)
    d = dsg(base)
    assert d.induced(frozenset(range(1, base.n + 1))).edges == base.edges


def test_doubling_sign_rules():
    base = make_k2k_m(3)
    d = dsg(base)
    n = base.n
    for u in range(1, n + 1):
        for v in range(1, n + 1):
            if u == v:
                assert not d.has_edge(u, n + v)
                continue
            s = base.sign_of[(min(u, v), max(u, v))]
            if u < v:
                assert d.sign_of[(u, v)] == s  # + side copies
                assert d.sign_of[(n + u, n + v)] == s  # - side copies
            assert d.sign_of[(u, n + v)] == -s  # cross flips


# --- color algebra ----------------------------------------------------------


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6])
def test_algebra_invariants(k):
    alg = dsg_space(k2km_space(k)).algebra
    all_colors = range(1, alg.num_colors + 1)
    graph = dsg(make_k2k_m(k))
    for c in all_colors:
        p = alg.pair(c)
        assert p != c and alg.pair(p) == c
        assert alg.side(p) == alg.side(c)
        assert graph.sign_of[(c, p)] == -1
        inv = alg.inverse(c)
        assert not graph.has_edge(c, inv)
        assert alg.base_index(inv) == alg.base_index(c)
        assert alg.side(inv) == 1 - alg.side(c)
        assert alg.layer(c) == alg.layer(p)
    layers = {}
    for c in all_colors:
        layers.setdefault(alg.layer(c), set()).add(c)
    assert len(layers) == k
    assert all(len(members) == 4 for members in layers.values())


def test_classification_of_named_sets():
    d = classify_set(K6M_DOUBLED.algebra, colors("1+", "2+", "3+", "4+", "5+"))
    assert d.paired and d.layered and d.one_sided
    assert d.neighbored is None and (d.on_plus, d.on_minus) == (5, 0)

    assert not classify_set(K6M_DOUBLED.algebra, colors("1+", "3+")).paired

    d = classify_set(K6M_DOUBLED.algebra, colors("1-", "2-", "3-", "4-", "5+"))
    assert d.neighbored == 2


def test_one_sided_even_sets_classify_as_one_sided():
    d = classify_set(K6M_DOUBLED.algebra, colors("1+", "2+", "3+", "4+"))
    assert d.paired and d.layered and d.one_sided


def test_shape_family_counts_in_doubled_k6m():
    alg = K6M_DOUBLED.algebra
    neighbored5 = set(alg.neighbored_sets(5))
    assert len(neighbored5) == 12
    # each is the positive neighborhood of exactly one vertex
    pos_nbrs = {
        v: frozenset(w for w, s in K6M_DOUBLED.graph.adjacency[v] if s > 0)
        for v in K6M_DOUBLED.graph.vertices()
    }
    assert set(pos_nbrs.values()) == neighbored5
    assert len(set(alg.neighbored_sets(3))) == 24
    paired10 = set(alg.paired_sets(10))
    assert len(paired10) == 6
    full = frozenset(range(1, 13))
    assert paired10 == {full - p for p in alg.pairs()}


def test_enumerated_families_match_the_classifier():
    alg = K6M_DOUBLED.algebra
    for size in (1, 3, 5):
        for s in alg.neighbored_sets(size):
            assert classify_set(alg, s).neighbored == size // 2
    for s in alg.one_sided_sets(4):
        d = classify_set(alg, s)
        assert d.one_sided and d.size == 4
    # exhaustive cross-check of the neighbored flag over every subset
    expected = {s for size in (1, 3, 5) for s in alg.neighbored_sets(size)}
    found = set()
    for bits in range(1 << 12):
        s = frozenset(c for c in range(1, 13) if bits >> (c - 1) & 1)
        if classify_set(alg, s).neighbored is not None:
            found.add(s)
    assert found == expected


def test_set_formatting_round_trip():
    t = K6M_DOUBLED
    s = colors("2+", "5-", "6-")
    assert t.format_set(s) == "{2+, 5-, 6-}"
    assert t.set_of(t.mask_of(s)) == s
    with pytest.raises(KeyError):
        t.color_named("7+")

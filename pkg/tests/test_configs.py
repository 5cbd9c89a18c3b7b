"""Reducible-configuration extension checks.

A configuration is a small graph with designated boundary vertices; it is
reducible when every precoloring of its boundary extends to the interior
for at least one signature class of the configuration.  verify_config_extension
replays that extension claim exhaustively, one clause per signature class.
"""

import pytest

from signedhom import CONFIG_IDS, verify_config_extension
from signedhom.core import SignedGraph
from signedhom.verify.configs import config

K6_IDS = tuple(i for i in CONFIG_IDS if i.startswith("k6:"))
K8_IDS = tuple(i for i in CONFIG_IDS if i.startswith("k8:"))
POOR_PATH_IDS = tuple(i for i in CONFIG_IDS if i.startswith("k6:poor-path:"))


def test_config_id_inventory():
    assert CONFIG_IDS == (
        "k6:2_1",
        "k6:3_2",
        "k6:4_4",
        "k6:5_5",
        "k6:4_3-3_1",
        "k6:4_3-3_1-shared",
        "k6:3_1-3_1-shared-2",
        "k6:3_0-3_1-3_1-triangle",
        "k6:3_1-3_1-3_1",
        "k6:3_1-3_1-3_1-cycle",
        "k6:3_0-nbrs-2",
        "k6:3_0-nbrs-3_0-adj",
        "k6:3_0-nbrs-3_0-nonadj",
        "k6:poor-path:k0-t1t2",
        "k6:poor-path:k0-t2t2",
        "k6:poor-path:k1-t1t1",
        "k6:poor-path:k1-t1t2",
        "k6:poor-path:k1-t2t2",
        "k6:poor-path:k2-t1t1",
        "k6:poor-path:k2-t1t2",
        "k6:poor-path:k2-t2t2",
        "k8:1-vertex",
        "k8:2_1",
        "k8:3_1",
        "k8:4_3",
        "k8:5_5",
        "sanity:isolated",
    )
    assert len(POOR_PATH_IDS) == 8


@pytest.mark.parametrize("config_id", CONFIG_IDS)
def test_every_boundary_precoloring_extends(config_id):
    report = verify_config_extension(config_id)
    assert report.ok, report.lines()
    assert report.instances > 0


def test_two_vertex_chain_counts():
    """Boundary of 2 over the 12-color space: 12^2 precolorings."""
    report = verify_config_extension("k6:2_1")
    assert report.params == (("classes", "1"), ("boundary", "2"))
    [clause] = report.clauses
    assert clause.clause == "extends-class0"
    assert (clause.instances, clause.failure_count) == (144, 0)


def test_weak_three_vertex_counts():
    report = verify_config_extension("k6:3_2")
    assert report.params == (("classes", "1"), ("boundary", "3"))
    [clause] = report.clauses
    assert (clause.instances, clause.failure_count) == (1728, 0)


def test_k8_weak_three_vertex_uses_its_gate():
    """The k8 3_1 configuration filters boundary colorings at a gate vertex."""
    report = verify_config_extension("k8:3_1")
    [clause] = report.clauses
    assert (clause.instances, clause.failure_count) == (3584, 0)
    assert clause.note == "gate-filtered precolorings: 32"
    # 16^3 raw precolorings, minus the gate-filtered share
    assert clause.instances == 3584 < 16**3


def test_nonedge_neighborhood_config_checks_all_four_classes():
    report = verify_config_extension("k6:3_0-nbrs-3_0-adj")
    assert report.params[0] == ("classes", "4")
    assert [c.clause for c in report.clauses] == [
        f"extends-class{i}" for i in range(4)
    ]
    assert all(c.instances == 1728 for c in report.clauses)
    assert report.instances == 4 * 1728


def test_isolated_vertex_sanity_config():
    report = verify_config_extension("sanity:isolated")
    assert report.instances == 1
    assert report.ok


def test_config_accessor_exposes_structure():
    spec = config("k6:3_2")
    g = spec.graph()
    assert isinstance(g, SignedGraph)
    assert g.n == spec.n == 6
    assert len(spec.boundary) == 3
    assert all(g.degree(v) == 1 for v in spec.boundary)
    assert spec.base_k == 3


def test_poor_path_configs_grow_with_k():
    sizes = [config(f"k6:poor-path:k{k}-t2t2").n for k in (0, 1, 2)]
    assert sizes == sorted(sizes)
    assert sizes[0] < sizes[1] < sizes[2]


def test_all_edges_positive_in_config_graphs():
    # configurations quantify over signature classes separately, so the
    # base graph is stored all-positive
    for config_id in CONFIG_IDS:
        g = config(config_id).graph()
        assert all(s == 1 for _, _, s in g.edges)


def test_unknown_config_rejected():
    with pytest.raises(ValueError, match="unknown config"):
        verify_config_extension("k6:9_9")
    with pytest.raises(ValueError):
        config("")

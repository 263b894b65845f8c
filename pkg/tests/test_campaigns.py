"""Campaign reports: tallies, determinism, and witness re-verification."""

import pytest

from hpindex import (
    CampaignReport,
    FamilyParams,
    SearchBudget,
    ValidationError,
    compare_formula_oracle,
    explore_conclusion,
    graph_from_token_edges,
    verify_hnw,
    verify_trees,
    verify_xiongzong,
)
from hpindex.version import __version__

BODY_KEYS = {"campaign", "version", "parameters", "seed", "instances",
             "counts", "witnesses"}


def test_report_rejects_bad_counts():
    with pytest.raises(ValidationError):
        CampaignReport("x", {}, None, 1, {"agree": 1}, (), 0.0)
    with pytest.raises(ValidationError):
        CampaignReport("x", {}, None, 2,
                       {"agree": 1, "mismatch": 0, "capped": 0}, (), 0.0)


def test_report_body_excludes_wall_clock():
    counts = {"agree": 1, "mismatch": 0, "capped": 0}
    a = CampaignReport("x", {"p": 1}, 7, 1, counts, (), 0.25)
    b = CampaignReport("x", {"p": 1}, 7, 1, counts, (), 99.0)
    assert a.body_bytes() == b.body_bytes()
    assert set(a.body_dict()) == BODY_KEYS
    assert set(a.to_json_dict()) == BODY_KEYS | {"wall_clock_s"}
    assert a.to_json_dict()["wall_clock_s"] == 0.25
    assert a.to_json_dict()["version"] == __version__


def test_verify_trees_small_all_agree():
    report = verify_trees(6)
    assert report.campaign == "verify-trees"
    assert report.parameters == {"max_n": 6}
    assert report.seed is None
    assert report.instances == 14  # trees on 1..6 vertices
    assert report.counts == {"agree": 14, "mismatch": 0, "capped": 0}
    assert report.witnesses == ()
    assert report.wall_clock_s >= 0


def test_verify_trees_bounds():
    with pytest.raises(ValidationError):
        verify_trees(0)
    with pytest.raises(ValidationError):
        verify_trees(15)


def test_verify_trees_rerun_is_byte_identical():
    assert verify_trees(5).body_bytes() == verify_trees(5).body_bytes()


def test_verify_trees_tight_budget_caps_honestly():
    # stage graphs above five vertices are refused, so big trees cap
    budget = SearchBudget(dp_vertex_cap=5, backtrack_vertex_cap=5)
    report = verify_trees(6, budget=budget)
    assert report.instances == 14
    assert report.counts["capped"] > 0
    assert report.counts["mismatch"] == 0
    assert sum(report.counts.values()) == report.instances


def test_verify_xiongzong_exhaustive_small():
    report = verify_xiongzong(4)
    assert report.campaign == "verify-xiongzong"
    # connected labeled graphs with an edge: 1 (n=2) + 4 (n=3) + 38 (n=4)
    assert report.instances == 43
    assert report.counts == {"agree": 43, "mismatch": 0, "capped": 0}
    assert report.witnesses == ()


def test_verify_hnw_exhaustive_small():
    report = verify_hnw(4)
    assert report.campaign == "verify-hnw"
    # needs three edges: the triangle, then every connected graph on 4
    assert report.instances == 39
    assert report.counts == {"agree": 39, "mismatch": 0, "capped": 0}
    assert report.witnesses == ()


def test_verify_trail_bounds():
    for bad in (1, 7):
        with pytest.raises(ValidationError):
            verify_xiongzong(bad)
        with pytest.raises(ValidationError):
            verify_hnw(bad)


def test_explore_finds_the_small_counterexample():
    report = explore_conclusion(FamilyParams(max_vertices=5, cycle_sizes=(3,)))
    assert report.campaign == "explore-conclusion"
    assert report.counts["mismatch"] >= 1
    assert len(report.witnesses) == report.counts["mismatch"]
    smallest = min(len({v for e in w["graph_edges"] for v in e})
                   for w in report.witnesses)
    assert smallest == 5


def test_explore_witnesses_reverify_from_their_edges():
    report = explore_conclusion(FamilyParams(max_vertices=5, cycle_sizes=(3,)))
    for w in report.witnesses:
        g = graph_from_token_edges(tuple(map(tuple, w["graph_edges"])))
        rec = compare_formula_oracle(g, family_tag=w["family_tag"])
        assert rec.verdict == "mismatch"
        assert rec.formula_value == w["formula_value"]
        assert rec.oracle_value == w["oracle_value"]
        assert rec.graph_key == w["graph_key"]


def test_explore_witnesses_sorted_and_shaped():
    report = explore_conclusion(FamilyParams(max_vertices=5, cycle_sizes=(3,)))
    keys = [w["graph_key"] for w in report.witnesses]
    assert keys == sorted(keys)
    for w in report.witnesses:
        assert {"graph_key", "graph_edges", "family_tag", "formula_value",
                "oracle_value", "verdict", "formula", "oracle"} <= set(w)
        assert w["verdict"] == "mismatch"


def test_explore_rerun_is_byte_identical():
    params = FamilyParams(max_vertices=6, cycle_sizes=(3, 4), seed=3)
    first = explore_conclusion(params)
    second = explore_conclusion(params)
    assert first.body_bytes() == second.body_bytes()
    assert first.seed == 3


def test_explore_parameter_echo():
    params = FamilyParams(max_vertices=6, cycle_sizes=(4, 3),
                          include_bases=False, seed=11)
    body = explore_conclusion(params).body_dict()
    assert body["parameters"] == {
        "max_vertices": 6,
        "cycle_sizes": [3, 4],
        "base_tree_source": "enumerated",
        "include_bases": False,
        "random_bases": 0,
    }
    assert body["seed"] == 11

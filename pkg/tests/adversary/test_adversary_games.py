# -*- coding: utf-8 -*-

import pytest

from online_thue_kit.graph.model import GraphClassRule
from online_thue_kit.graph.rules import validate_event, is_member
from online_thue_kit.universal.horizon import Target
from online_thue_kit.universal.path_graph import o_count
from online_thue_kit.universal.tracker import UniversalTracker
from online_thue_kit.adversary.games import random_game

RULES = [
    GraphClassRule.new("left_to_right_path"),
    GraphClassRule.new("path"),
    GraphClassRule.new("tree"),
    GraphClassRule.new("cycle"),
    GraphClassRule.new("series_parallel"),
    GraphClassRule.new("partial_k_tree", 2),
    GraphClassRule.new("k_tree", 3),
]


def test_bad_length():
    with pytest.raises(ValueError):
        random_game(RULES[0], -1, seed=1)
    assert len(random_game(RULES[0], 0, seed=1)) == 0


@pytest.mark.parametrize("rule", RULES, ids=lambda r: r.label)
def test_seeded_games_are_legal(rule):
    script = random_game(rule, 20, seed=42)
    assert len(script) == 20
    assert random_game(rule, 20, seed=42) == script
    graphs = script.graphs()
    for g, e in zip(graphs, script.events):
        assert validate_event(rule, g, e) is None
    assert is_member(rule, graphs[-1])


def test_different_seeds_differ():
    rule = GraphClassRule.new("tree")
    scripts = {random_game(rule, 15, seed=s).events for s in range(5)}
    assert len(scripts) > 1


@pytest.mark.parametrize(
    "rule,target,horizon",
    [
        (GraphClassRule.new("path"), None, 3),
        (GraphClassRule.new("tree"), None, 3),
        (GraphClassRule.new("k_tree", 2), Target.u(2), 3),
        (GraphClassRule.new("left_to_right_path"), Target.u(1), 4),
    ],
    ids=["path-O", "tree-U2", "k_tree-U2", "ltr-U1"],
)
def test_horizon_confined(rule, target, horizon):
    script = random_game(rule, 40, seed=7, horizon=horizon, target=target)
    tracker = UniversalTracker(rule, target)
    for e in script.events:
        tracker.push(e)
    for v in tracker.images:
        assert tracker.stage(v) <= horizon


def test_horizon_stops_early():
    rule = GraphClassRule.new("path")
    script = random_game(rule, 40, seed=7, horizon=2)
    # O_2 has 5 vertices, one of them the start
    assert len(script) <= o_count(2) - 1


if __name__ == "__main__":
    from online_thue_kit.tests import run_cov_test

    run_cov_test(
        __file__,
        "online_thue_kit.adversary.games",
        preview=False,
    )

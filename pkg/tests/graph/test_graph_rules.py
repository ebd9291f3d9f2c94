# -*- coding: utf-8 -*-

import pytest

from online_thue_kit.graph.model import Graph, GameEvent, GraphClassRule, apply_event
from online_thue_kit.graph.rules import (
    validate_event,
    is_k_tree,
    treewidth_at_most,
    is_member,
)
from online_thue_kit.adversary.games import random_game


def ev(v, attach=(), delete=()):
    return GameEvent.new(t=v - 1, v=v, attach=attach, delete=delete)


def is_legal(name, g, e, k=None):
    return validate_event(GraphClassRule.new(name, k), g, e) is None


def test_fresh_and_consecutive_ids():
    g = Graph.path([1, 2])
    rule = GraphClassRule.new("tree")
    assert validate_event(rule, g, ev(2, [1])) is not None
    assert validate_event(rule, g, ev(4, [1])) is not None
    assert validate_event(rule, g, ev(3, [9])) is not None
    assert validate_event(rule, g, ev(3, [1], [(1, 3)])) is not None
    assert validate_event(rule, g, ev(3, [1])) is None


def test_left_to_right_path():
    g = Graph.path([1, 2])
    assert is_legal("left_to_right_path", g, ev(3, [2]))
    assert not is_legal("left_to_right_path", g, ev(3, [1]))
    assert not is_legal("left_to_right_path", g, ev(3, [1, 2], [(1, 2)]))


def test_path():
    g = Graph.path([1, 2, 3])
    assert is_legal("path", g, ev(4, [1]))
    assert is_legal("path", g, ev(4, [3]))
    assert not is_legal("path", g, ev(4, [2]))
    assert is_legal("path", g, ev(4, [1, 2], [(1, 2)]))
    # parallel addition keeps the edge and makes a triangle
    assert not is_legal("path", g, ev(4, [1, 2]))
    assert not is_legal("path", g, ev(4, [1, 3], [(1, 3)]))


def test_tree_and_cycle():
    g = Graph.path([1, 2, 3])
    assert is_legal("tree", g, ev(4, [2]))
    assert is_legal("tree", g, ev(4, [2, 3], [(2, 3)]))
    assert not is_legal("tree", g, ev(4, [1, 3]))

    c = Graph.complete([1, 2, 3])
    assert is_legal("cycle", c, ev(4, [1, 3], [(1, 3)]))
    assert not is_legal("cycle", c, ev(4, [1]))
    assert not is_legal("cycle", c, ev(4, [1, 3]))


def test_series_parallel():
    g = Graph.path([1, 2])
    assert is_legal("series_parallel", g, ev(3, [1]))
    assert is_legal("series_parallel", g, ev(3, [1, 2]))
    assert is_legal("series_parallel", g, ev(3, [1, 2], [(1, 2)]))
    assert not is_legal("series_parallel", Graph.path([1, 2, 3]), ev(4, [1, 3]))


def test_k_trees():
    k3 = Graph.complete([1, 2, 3])
    assert is_legal("k_tree", k3, ev(4, [1, 2]), k=2)
    assert not is_legal("k_tree", k3, ev(4, [1]), k=2)
    assert not is_legal("k_tree", k3, ev(4, [1, 2], [(1, 2)]), k=2)

    g = Graph.path([1, 2, 3])
    assert is_legal("partial_k_tree", g, ev(4, [1, 2], [(2, 3)]), k=2)
    assert is_legal("partial_k_tree", g, ev(4), k=2)
    assert not is_legal("partial_k_tree", g, ev(4, [1, 3]), k=2)
    assert not is_legal("partial_k_tree", Graph.complete([1, 2, 3]), ev(4, [1, 2, 3]), k=2)


def test_is_k_tree():
    assert is_k_tree(Graph.complete([1, 2, 3]), 2)
    g = apply_event(Graph.complete([1, 2, 3]), ev(4, [1, 2]))
    assert is_k_tree(g, 2)
    assert not is_k_tree(Graph.cycle([1, 2, 3, 4]), 2)
    assert is_k_tree(Graph.path([1, 2, 3, 4]), 1)
    assert not is_k_tree(Graph.new([1]), 1)


def test_treewidth_at_most():
    assert treewidth_at_most(Graph.cycle([1, 2, 3, 4, 5]), 2)
    assert not treewidth_at_most(Graph.cycle([1, 2, 3, 4, 5]), 1)
    assert not treewidth_at_most(Graph.complete([1, 2, 3, 4]), 2)


@pytest.mark.parametrize(
    "name,k",
    [
        ("left_to_right_path", None),
        ("path", None),
        ("tree", None),
        ("cycle", None),
        ("series_parallel", None),
        ("partial_k_tree", 2),
        ("k_tree", 2),
        ("k_tree", 3),
    ],
)
def test_random_games_stay_in_class(name, k):
    rule = GraphClassRule.new(name, k)
    for seed in range(5):
        script = random_game(rule, 25, seed)
        g = rule.initial_graph()
        for e in script.events:
            assert validate_event(rule, g, e) is None
            g = apply_event(g, e)
            assert is_member(rule, g)


if __name__ == "__main__":
    from online_thue_kit.tests import run_cov_test

    run_cov_test(
        __file__,
        "online_thue_kit.graph.rules",
        preview=False,
    )

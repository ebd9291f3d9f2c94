# -*- coding: utf-8 -*-

import pytest

from online_thue_kit.exc import InvalidScript
from online_thue_kit.graph.model import Graph, GameEvent, GameScript, GraphClassRule
from online_thue_kit.graph.rules import is_k_tree
from online_thue_kit.graph.reduction import (
    g0_as_events,
    to_partial_events,
    PartialReducer,
    reduce_partial_to_full,
)
from online_thue_kit.adversary.games import random_game


def test_g0_as_events():
    assert g0_as_events(GraphClassRule.new("path")) == []
    events = g0_as_events(GraphClassRule.new("cycle"))
    assert [e.v for e in events] == [2, 3]
    assert events[1].attach == frozenset([1, 2])
    script = GameScript(rule=GraphClassRule.new("partial_k_tree", 2), events=tuple(events))
    assert script.final_graph() == Graph.complete([1, 2, 3])


def test_to_partial_events():
    rule = GraphClassRule.new("cycle")
    script = random_game(rule, 6, seed=1)
    partial = to_partial_events(script)
    assert partial.rule == GraphClassRule.new("partial_k_tree", 2)
    assert len(partial) == len(script) + 2
    assert partial.final_graph() == script.final_graph()

    with pytest.raises(ValueError):
        to_partial_events(GameScript(rule=GraphClassRule.new("k_tree", 3)), width=2)


def test_partial_reducer():
    reducer = PartialReducer(2)
    assert reducer.base == [1, 2, 3]
    assert reducer.push(GameEvent.new(t=1, v=2, attach=[1])) is None
    assert reducer.push(GameEvent.new(t=2, v=3)) is None
    # attach set {3} grows to the smallest k-clique around it
    e = GameEvent.new(t=3, v=4, attach=[3])
    assert reducer.preview(e) == (1, 3)
    full = reducer.push(e)
    assert full.attach == frozenset([1, 3])
    assert full.t == 1
    assert not full.delete
    assert is_k_tree(reducer.augmented_graph(), 2)
    with pytest.raises(InvalidScript):
        reducer.push(GameEvent.new(t=4, v=4, attach=[1]))
    with pytest.raises(ValueError):
        PartialReducer(0)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_reduce_partial_to_full(k):
    rule = GraphClassRule.new("partial_k_tree", k)
    for seed in range(5):
        script = random_game(rule, 30, seed)
        full = reduce_partial_to_full(k, script)
        assert full.rule == GraphClassRule.new("k_tree", k)
        # the full game contains the partial one at every step
        partial_graphs = script.graphs()
        full_graphs = full.graphs()
        for g in partial_graphs[k + 1 :]:
            h = full_graphs[len(g) - (k + 1)]
            assert g.is_subgraph_of(h)
            assert is_k_tree(h, k)


def test_reduce_partial_to_full_errors():
    with pytest.raises(InvalidScript):
        reduce_partial_to_full(2, GameScript(rule=GraphClassRule.new("path")))
    bad = GameScript(
        rule=GraphClassRule.new("partial_k_tree", 2),
        events=(GameEvent.new(t=1, v=3, attach=[1]),),
    )
    with pytest.raises(InvalidScript):
        reduce_partial_to_full(2, bad)


if __name__ == "__main__":
    from online_thue_kit.tests import run_cov_test

    run_cov_test(
        __file__,
        "online_thue_kit.graph.reduction",
        preview=False,
    )

# -*- coding: utf-8 -*-

from fractions import Fraction

import pytest

from online_thue_kit.exc import IncompatibleOracle
from online_thue_kit.graph.model import GameEvent, GraphClassRule
from online_thue_kit.universal.horizon import Target
from online_thue_kit.universal.tracker import (
    check_compatible,
    default_target,
    o_neighbors_among,
    UniversalTracker,
)


def test_check_compatible():
    path = GraphClassRule.new("path")
    ltr = GraphClassRule.new("left_to_right_path")
    tree = GraphClassRule.new("tree")
    k3 = GraphClassRule.new("k_tree", 3)

    check_compatible(path, Target.o())
    check_compatible(ltr, Target.o())
    check_compatible(ltr, Target.u(1))
    check_compatible(path, Target.u(2))
    check_compatible(tree, Target.u(2))
    check_compatible(k3, Target.u(4))
    with pytest.raises(IncompatibleOracle):
        check_compatible(tree, Target.o())
    with pytest.raises(IncompatibleOracle):
        check_compatible(path, Target.u(1))
    with pytest.raises(IncompatibleOracle):
        check_compatible(k3, Target.u(2))

    assert default_target(path) == Target.o()
    assert default_target(tree) == Target.u(2)
    assert default_target(k3) == Target.u(3)


def test_o_neighbors_among():
    by_height = {Fraction(0): 1, Fraction(1): 2, Fraction(2): 4}
    assert o_neighbors_among(Fraction(1, 2), by_height, 0) == [1, 2]
    assert o_neighbors_among(Fraction(-1), by_height, 0) == [1]
    by_height[Fraction(1, 2)] = 3
    # 1/4 is deeper than everything committed
    assert o_neighbors_among(Fraction(1, 4), by_height, 1) == [1, 3]


def test_path_tracker():
    tracker = UniversalTracker(GraphClassRule.new("path"))
    assert tracker.is_path_target
    assert tracker.stage(1) == 1
    assert tracker.text(1) == "0/2^0"

    e2 = GameEvent.new(t=1, v=2, attach=[1])
    e3 = GameEvent.new(t=2, v=3, attach=[1, 2], delete=[(1, 2)])
    e4 = GameEvent.new(t=3, v=4, attach=[1])
    assert tracker.preview(e2) == 1
    assert 2 not in tracker.images
    tracker.push(e2)
    assert tracker.preview(e3) == 2
    assert tracker.push(e3) == Fraction(1, 2)
    assert tracker.push(e4) == Fraction(-1)
    assert tracker.stage(4) == 2
    assert tracker.text(3) == "1/2^1"

    sg = tracker.committed_search_graph()
    assert sg.directed
    assert sg.vertices == (1, 2, 3, 4)
    # the 0 - 1 edge of O stays even though the game deleted it
    assert sg.adjacent(2, 1)
    assert sg.adjacent(2, 3) and sg.adjacent(3, 1) and sg.adjacent(1, 4)
    assert not sg.adjacent(1, 2)
    assert not sg.adjacent(4, 1)


def test_ktree_tracker():
    tracker = UniversalTracker(GraphClassRule.new("cycle"), Target.u(2))
    assert not tracker.is_path_target
    assert [tracker.text(v) for v in (1, 2, 3)] == ["b0", "b1", "b2"]

    e4 = GameEvent.new(t=1, v=4, attach=[1, 3], delete=[(1, 3)])
    assert tracker.preview(e4) == 2
    tracker.push(e4)
    assert tracker.text(4) == "d1(b0,b2)"
    assert tracker.stage(4) == 2

    e5 = GameEvent.new(t=2, v=5, attach=[1, 4], delete=[(1, 4)])
    tracker.push(e5)
    assert tracker.text(5) == "d1(b0,d1(b0,b2))"
    assert tracker.stage(5) == 3

    sg = tracker.committed_search_graph()
    assert not sg.directed
    # the reduction keeps deleted edges
    assert sg.adjacent(1, 3)
    assert sg.adjacent(1, 4)
    assert not sg.adjacent(2, 4)


def test_tree_tracker_late_base():
    tracker = UniversalTracker(GraphClassRule.new("tree"))
    assert tracker.target == Target.u(2)
    tracker.push(GameEvent.new(t=1, v=2, attach=[1]))
    tracker.push(GameEvent.new(t=2, v=3, attach=[2]))
    assert [tracker.text(v) for v in (1, 2, 3)] == ["b0", "b1", "b2"]
    tracker.push(GameEvent.new(t=3, v=4, attach=[3]))
    assert tracker.stage(4) == 2
    assert tracker.text(4) == "d1(b0,b2)"


if __name__ == "__main__":
    from online_thue_kit.tests import run_cov_test

    run_cov_test(
        __file__,
        "online_thue_kit.universal.tracker",
        preview=False,
    )

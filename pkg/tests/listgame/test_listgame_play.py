# -*- coding: utf-8 -*-

import pytest

from online_thue_kit.utils import iter_records
from online_thue_kit.repetition.checkers import check_path
from online_thue_kit.listgame.solver import ListGameSolver, solve_list_game
from online_thue_kit.listgame.play import (
    PainterStrategy,
    RandomListSource,
    ListTrace,
    play_list_game,
)


def test_painter_strategy():
    assert PainterStrategy.parse("greedy") == PainterStrategy(name="greedy")
    assert PainterStrategy.parse("lookahead:3") == PainterStrategy(name="lookahead", depth=3)
    assert PainterStrategy.parse("lookahead:3").label == "lookahead:3"
    assert PainterStrategy.parse("greedy").label == "greedy"
    for bad in ["greedy:2", "lookahead", "lookahead:x", "lookahead:0", "random"]:
        with pytest.raises(ValueError):
            PainterStrategy.parse(bad)


def test_random_list_source():
    a = RandomListSource(3, 5, seed=9)
    b = RandomListSource(3, 5, seed=9)
    for _ in range(10):
        lst = a.choose(())
        assert lst == b.choose(())
        assert lst.size == 3
        assert lst.colors <= set(range(1, 6))
    with pytest.raises(ValueError):
        RandomListSource(4, 3, seed=0)
    with pytest.raises(ValueError):
        RandomListSource(0, 3, seed=0)


def check_trace(trace: ListTrace, n: int):
    for lst, color in zip(trace.lists, trace.colors):
        assert color in lst
    assert check_path(trace.colors) is None
    if trace.survived:
        assert len(trace.colors) == len(trace.lists) == n
    else:
        assert len(trace.colors) == len(trace.lists) - 1


def test_single_color_lists():
    trace = play_list_game(PainterStrategy.parse("greedy"), RandomListSource(1, 1, seed=0), 5)
    assert trace.lists == [[1], [1]]
    assert trace.colors == [1]
    assert not trace.survived
    assert trace.witness.to_record() == {"path": [0, 1], "half_len": 1}
    check_trace(trace, 5)

    records = list(iter_records(trace.dumps()))
    assert records == [
        {"strategy": "greedy", "survived": False},
        {"t": 1, "list": [1], "color": 1},
        {"t": 2, "list": [1]},
        {"witness": {"path": [0, 1], "half_len": 1}},
    ]


@pytest.mark.parametrize("strategy", ["greedy", "lookahead:2"])
def test_random_lists(strategy):
    painter = PainterStrategy.parse(strategy)
    first = play_list_game(painter, RandomListSource(3, 6, seed=4), 20)
    again = play_list_game(painter, RandomListSource(3, 6, seed=4), 20)
    assert first == again
    check_trace(first, 20)


@pytest.mark.parametrize("strategy", ["greedy", "lookahead:3"])
def test_adversary_beats_every_painter(strategy):
    outcome = solve_list_game(2, 8)
    trace = play_list_game(PainterStrategy.parse(strategy), outcome.strategy, 10)
    assert not trace.survived
    assert len(trace.lists) <= outcome.depth
    check_trace(trace, 10)


def test_lookahead_shares_solver():
    solver = ListGameSolver(3)
    play_list_game(
        PainterStrategy.parse("lookahead:2"),
        RandomListSource(3, 4, seed=1),
        8,
        solver=solver,
    )
    assert solver.table


if __name__ == "__main__":
    from online_thue_kit.tests import run_cov_test

    run_cov_test(
        __file__,
        "online_thue_kit.listgame.play",
        preview=False,
    )

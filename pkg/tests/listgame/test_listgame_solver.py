# -*- coding: utf-8 -*-

import pytest

from online_thue_kit.adversary.path_game import AdversaryWins, PainterSurvives, Inconclusive
from online_thue_kit.listgame.solver import (
    ListAssignment,
    CanonicalList,
    canonical_list,
    ListPosition,
    forbidden_colors,
    ListGameSolver,
    ListAdversary,
    solve_list_game,
)
from online_thue_kit.tests.utils import pt_from_many_dict


def test_list_assignment():
    lst = ListAssignment.new([3, 1, 3])
    assert lst.colors == frozenset([1, 3])
    assert lst.size == 2
    with pytest.raises(ValueError):
        ListAssignment(colors=frozenset([1]), size=2)


def test_canonical_list():
    # 7 -> 1, 5 -> 2
    lst = canonical_list((7, 5, 7), [5, 9, 11])
    assert lst == CanonicalList(seen=frozenset([2]), fresh=2)
    assert lst.size == 3

    pos = ListPosition(colors=(7, 5, 7), list_size=3, pending=frozenset([5, 9, 11]))
    assert pos.canonical == ((1, 2, 1), lst)
    assert ListPosition(colors=(4,), list_size=1).canonical == ((1,), None)


def test_forbidden_colors():
    assert forbidden_colors(()) == frozenset()
    assert forbidden_colors((1,)) == frozenset([1])
    assert forbidden_colors((1, 2, 1)) == frozenset([1, 2])
    assert forbidden_colors((1, 2, 1, 3, 1, 2, 1)) == frozenset([1, 2, 3])


def test_adversary_lists():
    solver = ListGameSolver(2)
    assert solver.adversary_lists(()) == [CanonicalList(seen=frozenset(), fresh=2)]
    # (1, 2) forbids 2; the second member is 1 or a fresh color
    assert solver.adversary_lists((1, 2)) == [
        CanonicalList(seen=frozenset([1, 2]), fresh=0),
        CanonicalList(seen=frozenset([2]), fresh=1),
    ]
    assert solver.adversary_lists((1, 2, 1)) == []
    assert solver.replies((1, 2), CanonicalList(seen=frozenset([1, 2]), fresh=0)) == [(1, 2, 1)]
    assert solver.replies((1, 2), CanonicalList(seen=frozenset([2]), fresh=1)) == [(1, 2, 3)]
    with pytest.raises(ValueError):
        ListGameSolver(0)


def test_solve_small_lists():
    rows = []
    for s, max_plies, expected in [
        (1, 6, ("adversary_wins", 2)),
        (2, 8, ("adversary_wins", 4)),
        (4, 6, ("painter_survives", 6)),
    ]:
        outcome = solve_list_game(s, max_plies)
        rows.append(dict(s=s, outcome=outcome.label, depth=outcome.depth, nodes=outcome.nodes))
        assert (outcome.label, outcome.depth) == expected
    print(pt_from_many_dict(rows))


def test_list_adversary():
    outcome = solve_list_game(2, 8)
    assert isinstance(outcome, AdversaryWins)
    adversary = outcome.strategy
    assert isinstance(adversary, ListAdversary)
    assert adversary.list_size == 2
    assert adversary.choose(()) == ListAssignment.new([1, 2])
    lst = adversary.choose((5,))
    assert 5 in lst.colors
    assert lst.size == 2


def test_list_game_edges():
    solver = ListGameSolver(2)
    assert not solver.adversary_wins((), 0)
    assert solver.painter_survives((), 3)
    assert isinstance(solve_list_game(3, 20, node_cap=3), Inconclusive)
    with pytest.raises(ValueError):
        solve_list_game(2, 0)
    assert isinstance(solve_list_game(3, 2), PainterSurvives)


if __name__ == "__main__":
    from online_thue_kit.tests import run_cov_test

    run_cov_test(
        __file__,
        "online_thue_kit.listgame.solver",
        preview=False,
    )

# -*- coding: utf-8 -*-

import itertools
from fractions import Fraction

import pytest

from online_thue_kit.exc import SizeGuard
from online_thue_kit.universal.path_graph import (
    MAX_O_HORIZON,
    o_vertex,
    o_depth,
    o_adjacent,
    o_stage,
    o_text,
    o_count,
    build_o,
    monotone_path_count,
)


def test_o_vertex():
    assert o_vertex("3/4") == Fraction(3, 4)
    assert o_vertex(-2) == Fraction(-2)
    with pytest.raises(ValueError):
        o_vertex("1/3")


def test_o_depth_stage_text():
    assert o_depth(Fraction(0)) == 0
    assert o_depth(Fraction(3, 8)) == 3
    assert o_stage(Fraction(0)) == 1
    assert o_stage(Fraction(1)) == 1
    assert o_stage(Fraction(1, 2)) == 2
    assert o_stage(Fraction(-1)) == 2
    assert o_stage(Fraction(3, 2)) == 3
    assert o_stage(Fraction(5, 2)) == 4
    assert o_text(Fraction(-3, 4)) == "-3/2^2"
    assert o_text(Fraction(2)) == "2/2^0"


def test_o_adjacent():
    assert o_adjacent(Fraction(0), Fraction(1))
    assert o_adjacent(Fraction(0), Fraction(1, 2))
    assert o_adjacent(Fraction(-1), Fraction(0))
    assert not o_adjacent(Fraction(1, 4), Fraction(3, 4))
    assert not o_adjacent(Fraction(0), Fraction(2))
    assert not o_adjacent(Fraction(1, 2), Fraction(1, 2))


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5, 6])
def test_closed_forms_match_construction(d):
    built = build_o(d)
    assert len(built.vertices) == o_count(d)
    for q in built.vertices:
        assert o_stage(q) <= d
    for u, v in itertools.combinations(built.vertices, 2):
        edge = (u, v) if u < v else (v, u)
        assert o_adjacent(u, v) == (edge in built.edges)


def test_stages_nest():
    for d in range(1, 6):
        small = set(build_o(d).vertices)
        big = build_o(d + 1).vertices
        assert small == {q for q in big if o_stage(q) <= d}


def test_build_o_guards():
    with pytest.raises(ValueError):
        build_o(0)
    with pytest.raises(SizeGuard):
        build_o(MAX_O_HORIZON + 1)


def test_counts():
    assert [o_count(d) for d in range(1, 6)] == [2, 5, 11, 23, 47]
    assert [monotone_path_count(d) for d in range(5)] == [1, 2, 5, 26, 677]


if __name__ == "__main__":
    from online_thue_kit.tests import run_cov_test

    run_cov_test(
        __file__,
        "online_thue_kit.universal.path_graph",
        preview=False,
    )

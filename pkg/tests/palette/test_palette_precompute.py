# -*- coding: utf-8 -*-

import dataclasses

import pytest

from online_thue_kit.exc import SizeGuard, Unsatisfiable, PaletteFormatError
from online_thue_kit.sequences import thue_ternary
from online_thue_kit.graph.model import Graph
from online_thue_kit.repetition.search import SearchGraph
from online_thue_kit.universal.horizon import Target, materialize
from online_thue_kit.palette.frozen import Verification, dumps_palette
from online_thue_kit.palette.precompute import (
    exhaustive_horizon,
    offline_color,
    verify_sampled,
    verify_palette,
    precompute,
    reverify_palette,
)


def test_exhaustive_horizon():
    assert exhaustive_horizon(Target.o()) == 5
    assert exhaustive_horizon(Target.u(1)) == 6
    assert exhaustive_horizon(Target.u(2)) == 3
    assert exhaustive_horizon(Target.u(5)) == 2


def test_offline_color():
    c = offline_color(Graph.path(list(range(1, 21))), 3)
    assert len(c.assignment) == 20
    assert max(c.assignment.values()) <= 3
    with pytest.raises(Unsatisfiable):
        offline_color(Graph.path(list(range(1, 5))), 2)
    with pytest.raises(Unsatisfiable):
        offline_color(Graph.cycle([1, 2, 3, 4, 5]), 3)
    # bounded search only refutes short squares
    with pytest.raises(Unsatisfiable):
        offline_color(Graph.complete([1, 2, 3]), 2, max_half=1)


def test_verify_sampled():
    sg = SearchGraph.undirected(Graph.path([1, 2, 3, 4]))
    bad = {1: 1, 2: 2, 3: 1, 4: 2}
    w = verify_sampled(sg, bad, samples=50, max_len=4, seed=0)
    assert w is not None
    assert set(w.path) == {1, 2, 3, 4}

    good_path = list(range(1, 31))
    sg = SearchGraph.undirected(Graph.path(good_path))
    good = dict(zip(good_path, [x + 1 for x in thue_ternary(30)]))
    assert verify_sampled(sg, good, samples=50, max_len=30, seed=0) is None
    assert verify_sampled(sg, {}, samples=5, max_len=3, seed=0) is None


def test_precompute_o_full():
    p = precompute(Target.o(), 4, 2, Verification.full())
    assert p.horizon == 2
    assert len(p) == 5
    assert max(p.assignment.values()) <= 4
    # same inputs, same bytes
    again = precompute(Target.o(), 4, 2, Verification.full())
    assert dumps_palette(again) == dumps_palette(p)
    reverify_palette(p)

    hg = materialize(Target.o(), 2)
    colors = {i: p.assignment[hg.text_of(i)] for i in hg.ids}
    assert verify_palette(hg, colors, Verification.full()) is None


def test_precompute_o_vertical():
    with pytest.raises(Unsatisfiable):
        precompute(Target.o(), 2, 3, Verification.vertical_full())
    p = precompute(Target.o(), 12, 3, Verification.vertical_full())
    assert len(p) == 11
    reverify_palette(p)


def test_precompute_u_bounded():
    p = precompute(Target.u(1), 4, 4, Verification.bounded(4))
    assert len(p) == 16
    assert p.verification == Verification.bounded(4)
    reverify_palette(p)


def test_precompute_guards():
    with pytest.raises(SizeGuard):
        precompute(Target.o(), 4, 6, Verification.full())
    with pytest.raises(ValueError):
        precompute(Target.u(2), 16, 2, Verification.vertical_full())


def test_reverify_errors():
    p = precompute(Target.o(), 4, 2, Verification.full())
    with pytest.raises(PaletteFormatError):
        reverify_palette(dataclasses.replace(p, order_version=99))

    partial = dict(p.assignment)
    partial.pop("2/2^0")
    with pytest.raises(PaletteFormatError):
        reverify_palette(dataclasses.replace(p, assignment=partial))

    clash = dict(p.assignment)
    clash["1/2^0"] = clash["0/2^0"]
    with pytest.raises(PaletteFormatError):
        reverify_palette(dataclasses.replace(p, assignment=clash))

    deep = dataclasses.replace(p, horizon=9, verification=Verification.bounded(2))
    # too deep to materialize, so only the version is checked
    reverify_palette(deep)


@pytest.mark.slow
def test_precompute_u1_full_d6():
    p = precompute(Target.u(1), 4, 6, Verification.full())
    assert len(p) == 64
    reverify_palette(p)


if __name__ == "__main__":
    from online_thue_kit.tests import run_cov_test

    run_cov_test(
        __file__,
        "online_thue_kit.palette.precompute",
        preview=False,
    )

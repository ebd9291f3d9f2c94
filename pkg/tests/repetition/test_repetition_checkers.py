# -*- coding: utf-8 -*-

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from online_thue_kit.exc import NotATree, SizeGuard
from online_thue_kit.sequences import thue_ternary
from online_thue_kit.graph.model import Graph, Coloring
from online_thue_kit.repetition.structures import Digraph, RootedTree
from online_thue_kit.repetition.witness import revalidate
from online_thue_kit.repetition.checkers import (
    check_path,
    check_graph,
    check_directed,
    check_tree,
    check_vertical,
)


def coloring(*colors):
    return Coloring.new({v: c for v, c in enumerate(colors, start=1)})


def brute_force_has_square(g: Graph, colors) -> bool:
    """
    Every simple path of every even length, the slow way.
    """
    adj = g.adjacency

    def walks(path):
        yield path
        for u in adj[path[-1]]:
            if u not in path:
                yield from walks(path + [u])

    for s in g.vertices:
        for path in walks([s]):
            n = len(path)
            if n % 2 == 0 and n > 0:
                half = n // 2
                if all(colors[path[i]] == colors[path[i + half]] for i in range(half)):
                    return True
    return False


def test_check_path():
    assert check_path([1, 2, 1, 3, 1, 2, 1]) is None
    w = check_path([1, 2, 1, 2])
    assert w.path == (0, 1, 2, 3)
    assert w.half_len == 2
    assert check_path([3, 1, 1]).path == (1, 2)
    assert check_path([]) is None


def test_check_graph():
    path4 = Graph.path([1, 2, 3, 4])
    assert check_graph(path4, coloring(1, 2, 1, 3)) is None
    w = check_graph(path4, coloring(1, 2, 1, 2))
    assert w.path == (1, 2, 3, 4)

    # the shortest square wins
    w = check_graph(Graph.path([1, 2, 3, 4, 5]), coloring(1, 2, 1, 2, 2))
    assert w.half_len == 1
    assert w.path == (4, 5)

    # the star has only paths of up to three vertices
    star = Graph.new([1], [(1, 2), (1, 3), (1, 4)])
    assert check_graph(star, coloring(1, 2, 2, 2)) is None

    # a triangle with two equal colors always has a square
    w = check_graph(Graph.complete([1, 2, 3]), coloring(1, 1, 2))
    assert w.path == (1, 2)

    with pytest.raises(ValueError):
        check_graph(path4, coloring(1, 2, 1))


def test_check_graph_size_guard():
    g = Graph.path(list(range(1, 31)))
    word = thue_ternary(30)
    c = Coloring.new({v: word[v - 1] + 1 for v in g.vertices})
    with pytest.raises(SizeGuard):
        check_graph(g, c)
    # bounded checks are not guarded
    assert check_graph(g, c, max_half=3) is None
    assert check_graph(g, c, vertex_budget=40) is None


@settings(max_examples=60, deadline=None)
@given(
    st.integers(min_value=2, max_value=7).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.lists(
                st.sampled_from(list(itertools.combinations(range(1, n + 1), 2))),
                max_size=10,
            ),
            st.lists(st.integers(min_value=1, max_value=3), min_size=n, max_size=n),
        )
    )
)
def test_check_graph_matches_brute_force(case):
    n, edges, colors = case
    g = Graph.new(range(1, n + 1), edges)
    c = coloring(*colors)
    w = check_graph(g, c)
    assert (w is not None) == brute_force_has_square(g, c.assignment)
    if w is not None:
        assert revalidate(w, c.assignment, g.has_edge)


def test_check_directed():
    # a directed path colored abab
    d = Digraph.new([1, 2, 3, 4], [(1, 2), (2, 3), (3, 4)])
    w = check_directed(d, coloring(1, 2, 1, 2))
    assert w.path == (1, 2, 3, 4)
    # the same underlying path, but no arc chain covers it
    d = Digraph.new([1, 2, 3, 4], [(1, 2), (3, 2), (3, 4)])
    assert check_directed(d, coloring(1, 2, 1, 2)) is None


def test_check_tree():
    star = Graph.new([1], [(1, 2), (1, 3), (1, 4)])
    assert check_tree(star, coloring(1, 2, 2, 2)) is None
    spider = Graph.new([1], [(1, 2), (2, 3), (1, 4), (4, 5)])
    # 3 - 2 - 1 - 4 colored 1 2 1 2
    w = check_tree(spider, Coloring.new({1: 1, 2: 2, 3: 1, 4: 2, 5: 3}))
    assert w.half_len == 2
    assert sorted(w.path) == [1, 2, 3, 4]
    assert w.path == min(w.path, w.path[::-1])

    with pytest.raises(NotATree):
        check_tree(Graph.cycle([1, 2, 3]), coloring(1, 2, 3))


def test_check_vertical():
    spider = Graph.new([1], [(1, 2), (2, 3), (1, 4), (4, 5)])
    tree = RootedTree.new(spider, 1)
    # the square 3 - 2 - 1 - 4 bends at the root, so it is not vertical
    c = Coloring.new({1: 1, 2: 2, 3: 1, 4: 2, 5: 3})
    assert check_vertical(tree, c) is None
    assert check_tree(spider, c) is not None

    path = RootedTree.new(Graph.path([1, 2, 3, 4]), 1)
    w = check_vertical(path, coloring(1, 2, 1, 2))
    assert w.path == (1, 2, 3, 4)


if __name__ == "__main__":
    from online_thue_kit.tests import run_cov_test

    run_cov_test(
        __file__,
        "online_thue_kit.repetition.checkers",
        preview=False,
    )

# -*- coding: utf-8 -*-

"""
Repetition checkers for colored sequences, graphs, trees and digraphs.

Every checker returns ``None`` for a nonrepetitive coloring or the canonical
:class:`~online_thue_kit.repetition.witness.RepetitionWitness`: the shortest
square, then the lexicographically smallest vertex sequence. Undirected
checkers compare both orientations of a path; directed ones only the
orientation along the arcs.
"""

import typing as T
import logging

import networkx as nx

from ..exc import SizeGuard, NotATree
from ..sequences import find_repetition
from ..graph.model import Graph, Coloring
from .structures import Digraph, RootedTree
from .search import SearchGraph, has_repetition
from .witness import RepetitionWitness

logger = logging.getLogger(__name__)

DEFAULT_GRAPH_VERTEX_BUDGET = 24


def check_path(colors: T.Sequence[int]) -> T.Optional[RepetitionWitness]:
    """
    Check the color string of a path, in path order. Witness entries are
    0-based positions.
    """
    hit = find_repetition(colors)
    if hit is None:
        return None
    start, half = hit
    return RepetitionWitness.new(range(start, start + 2 * half))


def _ensure_total(vertices: T.Iterable[int], c: Coloring):
    missing = [v for v in vertices if v not in c.assignment]
    if missing:
        raise ValueError(f"coloring misses vertices {sorted(missing)[:10]}")


def _guard(n: int, max_half: T.Optional[int], vertex_budget: int):
    if max_half is None and n > vertex_budget:
        raise SizeGuard(
            f"exhaustive check of {n} vertices exceeds the budget of "
            f"{vertex_budget}; pass a max half length or raise the budget"
        )


def _smallest_square_of_half(
    sg: SearchGraph,
    colors: T.Mapping[int, int],
    half: int,
) -> T.Optional[T.Tuple[int, ...]]:
    """
    Depth-first search from sorted starts through sorted neighbors; position
    ``i >= half`` must repeat the color at ``i - half``. The first complete
    path is the lexicographically smallest square of this half length.
    """
    size = 2 * half
    path: T.List[int] = []
    on_path: T.Set[int] = set()

    def grow() -> bool:
        if len(path) == size:
            return True
        i = len(path)
        for u in sg.succ.get(path[-1], ()):
            if u in on_path:
                continue
            if i >= half and colors[u] != colors[path[i - half]]:
                continue
            path.append(u)
            on_path.add(u)
            if grow():
                return True
            path.pop()
            on_path.discard(u)
        return False

    for s in sg.vertices:
        path[:] = [s]
        on_path.clear()
        on_path.add(s)
        if grow():
            return tuple(path)
    return None


def canonical_witness(
    sg: SearchGraph,
    colors: T.Mapping[int, int],
    max_half: T.Optional[int] = None,
) -> T.Optional[RepetitionWitness]:
    """
    The canonical witness of ``sg`` under ``colors``.

    A vertex-by-vertex replay decides existence and bounds the half length;
    the ordered search then only runs up to that bound.
    """
    found = has_repetition(sg, colors, max_half=max_half)
    if found is None:
        return None
    for half in range(1, found.half_len + 1):
        path = _smallest_square_of_half(sg, colors, half)
        if path is not None:
            return RepetitionWitness.new(path)
    return found  # pragma: no cover


def check_graph(
    g: Graph,
    c: Coloring,
    max_half: T.Optional[int] = None,
    vertex_budget: int = DEFAULT_GRAPH_VERTEX_BUDGET,
) -> T.Optional[RepetitionWitness]:
    """
    Look for a repetitively colored path in ``g``.

    :param max_half: only squares of half length ``<= max_half``; when
        ``None`` the check is exhaustive
    :param vertex_budget: largest graph accepted for the exhaustive check

    :raises SizeGuard: exhaustive check requested on a graph larger than the
        budget
    """
    _guard(len(g), max_half, vertex_budget)
    _ensure_total(g.vertices, c)
    return canonical_witness(SearchGraph.undirected(g), c.assignment, max_half)


def check_directed(
    d: Digraph,
    c: Coloring,
    max_half: T.Optional[int] = None,
    vertex_budget: int = DEFAULT_GRAPH_VERTEX_BUDGET,
) -> T.Optional[RepetitionWitness]:
    """
    Like :func:`check_graph`, over directed paths only.
    """
    _guard(len(d), max_half, vertex_budget)
    _ensure_total(d.vertices, c)
    return canonical_witness(SearchGraph.from_digraph(d), c.assignment, max_half)


def _best(
    best: T.Optional[T.Tuple[int, ...]],
    path: T.Sequence[int],
) -> T.Tuple[int, ...]:
    path = tuple(path)
    path = min(path, path[::-1])
    if best is None or (len(path), path) < (len(best), best):
        return path
    return best


def _is_square(colors: T.Mapping[int, int], path: T.Sequence[int]) -> bool:
    half = len(path) // 2
    return all(colors[path[i]] == colors[path[i + half]] for i in range(half))


def check_tree(t: Graph, c: Coloring) -> T.Optional[RepetitionWitness]:
    """
    Check every vertex pair of a tree along its unique path. Quadratic in the
    number of pairs, each path found by walking up to the common ancestor.

    :raises NotATree: when ``t`` is not a tree
    """
    if len(t) == 0 or not nx.is_tree(t.to_networkx()):
        raise NotATree(f"graph with {len(t)} vertices and {len(t.edges)} edges is not a tree")
    _ensure_total(t.vertices, c)
    tree = RootedTree.new(t, min(t.vertices))
    depth = tree.depth
    colors = c.assignment
    vertices = sorted(t.vertices)
    best: T.Optional[T.Tuple[int, ...]] = None
    for i, a in enumerate(vertices):
        for b in vertices[i + 1 :]:
            up_a, up_b = [a], [b]
            while depth[up_a[-1]] > depth[up_b[-1]]:
                up_a.append(tree.parent[up_a[-1]])
            while depth[up_b[-1]] > depth[up_a[-1]]:
                up_b.append(tree.parent[up_b[-1]])
            while up_a[-1] != up_b[-1]:
                up_a.append(tree.parent[up_a[-1]])
                up_b.append(tree.parent[up_b[-1]])
            path = up_a + up_b[-2::-1]
            if len(path) % 2:
                continue
            if best is not None and len(path) > len(best):
                continue
            if _is_square(colors, path):
                best = _best(best, path)
    if best is None:
        return None
    return RepetitionWitness.new(best)


def check_vertical(t: RootedTree, c: Coloring) -> T.Optional[RepetitionWitness]:
    """
    Check only the paths between a vertex and one of its ancestors.
    """
    _ensure_total(t.graph.vertices, c)
    colors = c.assignment
    best: T.Optional[T.Tuple[int, ...]] = None
    for v in sorted(t.graph.vertices):
        chain = t.ancestors(v)
        for half in range(1, len(chain) // 2 + 1):
            if best is not None and half > len(best) // 2:
                break
            path = chain[: 2 * half]
            if _is_square(colors, path):
                best = _best(best, path)
                break
    if best is None:
        return None
    return RepetitionWitness.new(best)

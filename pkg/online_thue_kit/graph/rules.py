# -*- coding: utf-8 -*-

"""
Legality of online events per graph class, and class membership checks.

The move shapes are:

- **append**: attach to one endpoint of the path, delete nothing
- **attach-one**: attach to any single vertex, delete nothing
- **subdivide**: attach to both ends of an edge and delete that edge
- **parallel-add**: attach to both ends of an edge, keep the edge
- **attach-to-clique**: attach to a clique (exactly ``k`` vertices for
  k-trees, at most ``k`` for partial k-trees, where any edges may also be
  deleted)

============================  ==============================================
class                         allowed moves
============================  ==============================================
``left_to_right_path``        append at the newest vertex
``path``                      append, subdivide
``tree``                      attach-one, subdivide
``cycle``                     subdivide
``series_parallel``           attach-one, subdivide, parallel-add
``partial_k_tree(k)``         attach-to-clique (size <= k) + any deletions
``k_tree(k)``                 attach-to-clique (size == k)
============================  ==============================================
"""

import typing as T
import dataclasses

import networkx as nx
from networkx.algorithms.approximation import treewidth_min_degree

from .model import Graph, GameEvent, GraphClass, GraphClassRule


@dataclasses.dataclass(frozen=True)
class Violation:
    """
    Why an event is illegal under a rule.
    """

    reason: str = dataclasses.field()


def _is_append(g: Graph, e: GameEvent) -> bool:
    if len(e.attach) != 1 or e.delete:
        return False
    (a,) = e.attach
    return g.degree(a) <= 1


def _is_attach_one(e: GameEvent) -> bool:
    return len(e.attach) == 1 and not e.delete


def _attach_edge(g: Graph, e: GameEvent) -> T.Optional[T.Tuple[int, int]]:
    if len(e.attach) != 2:
        return None
    a, b = sorted(e.attach)
    if not g.has_edge(a, b):
        return None
    return a, b


def _is_subdivision(g: Graph, e: GameEvent) -> bool:
    edge = _attach_edge(g, e)
    return edge is not None and e.delete == frozenset([edge])


def _is_parallel_add(g: Graph, e: GameEvent) -> bool:
    return _attach_edge(g, e) is not None and not e.delete


def validate_event(
    rule: GraphClassRule,
    g: Graph,
    e: GameEvent,
) -> T.Optional[Violation]:
    """
    Check ``e`` against the move shapes of ``rule`` on the current graph
    ``g`` (assumed reachable from ``G_0`` under ``rule``).

    :returns: ``None`` when the event is legal, else a :class:`Violation`
    """
    if e.v in g.vertices:
        return Violation(f"step {e.t}: vertex {e.v} is not fresh")
    expected = max(g.vertices, default=0) + 1
    if e.v != expected:
        return Violation(f"step {e.t}: expected vertex id {expected}, got {e.v}")
    if not e.attach <= g.vertices:
        return Violation(f"step {e.t}: attach set {sorted(e.attach)} names unknown vertices")
    if not e.delete <= g.edges:
        return Violation(f"step {e.t}: delete set {sorted(e.delete)} names unknown edges")

    cls = rule.cls
    if cls == GraphClass.left_to_right_path:
        newest = max(g.vertices)
        if e.attach == frozenset([newest]) and not e.delete:
            return None
        return Violation(f"step {e.t}: left-to-right path must append at vertex {newest}")
    if cls == GraphClass.path:
        if _is_append(g, e) or _is_subdivision(g, e):
            return None
        return Violation(f"step {e.t}: neither an end-append nor a subdivision")
    if cls == GraphClass.tree:
        if _is_attach_one(e) or _is_subdivision(g, e):
            return None
        return Violation(f"step {e.t}: neither a leaf attachment nor a subdivision")
    if cls == GraphClass.cycle:
        if _is_subdivision(g, e):
            return None
        return Violation(f"step {e.t}: a cycle only grows by subdividing an edge")
    if cls == GraphClass.series_parallel:
        if _is_attach_one(e) or _is_subdivision(g, e) or _is_parallel_add(g, e):
            return None
        return Violation(
            f"step {e.t}: not an attachment, subdivision or parallel addition"
        )
    if cls == GraphClass.partial_k_tree:
        if len(e.attach) > rule.k:
            return Violation(f"step {e.t}: attach set larger than k={rule.k}")
        if not g.is_clique(sorted(e.attach)):
            return Violation(f"step {e.t}: attach set is not a clique")
        return None
    if cls == GraphClass.k_tree:
        if e.delete:
            return Violation(f"step {e.t}: k-trees never delete edges")
        if len(e.attach) != rule.k:
            return Violation(f"step {e.t}: attach set must have exactly k={rule.k} vertices")
        if not g.is_clique(sorted(e.attach)):
            return Violation(f"step {e.t}: attach set is not a clique")
        return None
    raise NotImplementedError(cls)  # pragma: no cover


def is_k_tree(g: Graph, k: int) -> bool:
    """
    Perfect-elimination check: repeatedly strip a vertex of degree ``k``
    whose neighborhood is a clique until ``K_{k+1}`` remains.
    """
    n = len(g)
    if n < k + 1:
        return False
    if len(g.edges) != k * n - k * (k + 1) // 2:
        return False
    h = g.to_networkx()
    if not nx.is_connected(h):
        return False
    while h.number_of_nodes() > k + 1:
        leaf = None
        for v in sorted(h.nodes):
            if h.degree(v) == k:
                nbrs = list(h.neighbors(v))
                if all(h.has_edge(a, b) for i, a in enumerate(nbrs) for b in nbrs[i + 1 :]):
                    leaf = v
                    break
        if leaf is None:
            return False
        h.remove_node(leaf)
    return h.number_of_edges() == k * (k + 1) // 2


def treewidth_at_most(g: Graph, k: int) -> bool:
    """
    Treewidth test through the min-degree elimination heuristic.

    Exact for ``k <= 2`` (eliminating a vertex of degree at most two never
    raises the width); for larger ``k`` a ``False`` may be a false negative.
    """
    if len(g) <= k + 1:
        return True
    width, _ = treewidth_min_degree(g.to_networkx())
    return width <= k


def is_member(rule: GraphClassRule, g: Graph) -> bool:
    """
    Whether ``g`` belongs to the class of ``rule``.
    """
    h = g.to_networkx()
    cls = rule.cls
    if cls.is_path_like:
        if len(g) == 1:
            return True
        return nx.is_tree(h) and max(d for _, d in h.degree) <= 2
    if cls == GraphClass.tree:
        return nx.is_tree(h)
    if cls == GraphClass.cycle:
        return (
            len(g) >= 3
            and nx.is_connected(h)
            and all(d == 2 for _, d in h.degree)
        )
    if cls == GraphClass.series_parallel:
        return nx.is_connected(h) and treewidth_at_most(g, 2)
    if cls == GraphClass.partial_k_tree:
        return treewidth_at_most(g, rule.k)
    if cls == GraphClass.k_tree:
        return is_k_tree(g, rule.k)
    raise NotImplementedError(cls)  # pragma: no cover

# -*- coding: utf-8 -*-

"""
Rooted trees, digraphs and the adjacency views the repetition search runs on.

All searches take a pair of neighbor maps ``succ`` / ``pred``. An undirected
graph passes its adjacency as both; a digraph passes out- and in-neighbors.
"""

import typing as T
import dataclasses
from fractions import Fraction
from functools import cached_property

import networkx as nx

from ..exc import NotATree
from ..graph.model import Graph

Adjacency = T.Mapping[int, T.Sequence[int]]
Arc = T.Tuple[int, int]


@dataclasses.dataclass(frozen=True)
class Digraph:
    """
    A finite simple directed graph.

    :param vertices: vertex ids
    :param arcs: ``(tail, head)`` pairs
    """

    vertices: T.FrozenSet[int] = dataclasses.field()
    arcs: T.FrozenSet[Arc] = dataclasses.field()

    def __post_init__(self):
        for a, b in self.arcs:
            if a == b:
                raise ValueError(f"self-loop on vertex {a}")
            if a not in self.vertices or b not in self.vertices:
                raise ValueError(f"arc {(a, b)} has an endpoint outside the graph")

    @classmethod
    def new(
        cls,
        vertices: T.Iterable[int] = (),
        arcs: T.Iterable[Arc] = (),
    ) -> "Digraph":
        vs = set(vertices)
        es = set()
        for a, b in arcs:
            es.add((a, b))
            vs.add(a)
            vs.add(b)
        return cls(vertices=frozenset(vs), arcs=frozenset(es))

    @classmethod
    def bidirected(cls, g: Graph) -> "Digraph":
        """
        Both directions of every edge of ``g``.
        """
        return cls.new(
            g.vertices,
            [arc for a, b in g.edges for arc in ((a, b), (b, a))],
        )

    @cached_property
    def succ(self) -> T.Dict[int, T.Tuple[int, ...]]:
        out: T.Dict[int, T.List[int]] = {v: [] for v in self.vertices}
        for a, b in self.arcs:
            out[a].append(b)
        return {v: tuple(sorted(ns)) for v, ns in out.items()}

    @cached_property
    def pred(self) -> T.Dict[int, T.Tuple[int, ...]]:
        inc: T.Dict[int, T.List[int]] = {v: [] for v in self.vertices}
        for a, b in self.arcs:
            inc[b].append(a)
        return {v: tuple(sorted(ns)) for v, ns in inc.items()}

    def has_arc(self, a: int, b: int) -> bool:
        return (a, b) in self.arcs

    def to_networkx(self) -> nx.DiGraph:
        d = nx.DiGraph()
        d.add_nodes_from(sorted(self.vertices))
        d.add_edges_from(sorted(self.arcs))
        return d

    def __len__(self) -> int:
        return len(self.vertices)


@dataclasses.dataclass(frozen=True)
class RootedTree:
    """
    A tree with a distinguished root.

    :param graph: the underlying tree
    :param root: the root id
    :param parent: vertex -> parent, every vertex except the root
    """

    graph: Graph = dataclasses.field()
    root: int = dataclasses.field()
    parent: T.Mapping[int, int] = dataclasses.field()

    def __post_init__(self):
        if self.root not in self.graph.vertices:
            raise ValueError(f"root {self.root} is not a vertex")
        if set(self.parent) != self.graph.vertices - {self.root}:
            raise ValueError("parent map must cover every non-root vertex")
        for v, p in self.parent.items():
            if not self.graph.has_edge(v, p):
                raise ValueError(f"parent of {v} is {p}, which is not a neighbor")

    @classmethod
    def new(cls, g: Graph, root: int) -> "RootedTree":
        """
        Root the tree ``g`` at ``root``.

        :raises NotATree: when ``g`` is not a tree
        """
        if len(g) == 0 or not nx.is_tree(g.to_networkx()):
            raise NotATree(f"graph with {len(g)} vertices and {len(g.edges)} edges is not a tree")
        parent: T.Dict[int, int] = {}
        for p, v in nx.bfs_edges(g.to_networkx(), root):
            parent[v] = p
        return cls(graph=g, root=root, parent=parent)

    @cached_property
    def depth(self) -> T.Dict[int, int]:
        depth = {self.root: 0}
        for v in self.bfs_order():
            if v != self.root:
                depth[v] = depth[self.parent[v]] + 1
        return depth

    def bfs_order(self) -> T.List[int]:
        order = [self.root]
        children = self.children
        i = 0
        while i < len(order):
            order.extend(children[order[i]])
            i += 1
        return order

    @cached_property
    def children(self) -> T.Dict[int, T.Tuple[int, ...]]:
        out: T.Dict[int, T.List[int]] = {v: [] for v in self.graph.vertices}
        for v, p in self.parent.items():
            out[p].append(v)
        return {v: tuple(sorted(cs)) for v, cs in out.items()}

    def ancestors(self, v: int) -> T.List[int]:
        """
        ``[v, parent(v), ..., root]``.
        """
        chain = [v]
        while chain[-1] != self.root:
            chain.append(self.parent[chain[-1]])
        return chain

    def is_vertical(self, path: T.Sequence[int]) -> bool:
        """
        Whether ``path`` runs between a vertex and one of its descendants.
        """
        if len(path) <= 1:
            return True
        down = all(self.parent.get(b) == a for a, b in zip(path, path[1:]))
        up = all(self.parent.get(a) == b for a, b in zip(path, path[1:]))
        return down or up

    def to_digraph(self) -> Digraph:
        """
        Arcs from parent to child. Directed paths are exactly the vertical
        paths read downwards.
        """
        return Digraph.new(
            self.graph.vertices,
            [(p, v) for v, p in self.parent.items()],
        )


def orient_by_heights(g: Graph, heights: T.Mapping[int, Fraction]) -> Digraph:
    """
    Direct every edge of ``g`` from its higher to its lower endpoint.

    :raises ValueError: when an edge joins two vertices of equal height
    """
    arcs = []
    for a, b in sorted(g.edges):
        ha, hb = heights[a], heights[b]
        if ha == hb:
            raise ValueError(f"edge {(a, b)} joins two vertices at height {ha}")
        arcs.append((a, b) if ha > hb else (b, a))
    return Digraph.new(g.vertices, arcs)

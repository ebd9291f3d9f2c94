# -*- coding: utf-8 -*-

"""
Graphs, colorings, online events and the graph class rules they are played
under.

Every value in this module is immutable after construction. Vertices are
stable integer ids; the initial graph ``G_0`` of a rule always uses
``1 .. |G_0|`` and events number new vertices consecutively after that.
Undirected edges are stored as ``(low, high)`` pairs.
"""

import typing as T
import enum
import dataclasses
from functools import cached_property

import networkx as nx

from ..exc import InvalidEvent
from ..utils import Edge, normalize_edge


@dataclasses.dataclass(frozen=True)
class Graph:
    """
    A finite simple undirected graph.

    :param vertices: vertex ids
    :param edges: normalized ``(low, high)`` pairs, both endpoints in
        ``vertices``
    """

    vertices: T.FrozenSet[int] = dataclasses.field()
    edges: T.FrozenSet[Edge] = dataclasses.field()

    def __post_init__(self):
        for a, b in self.edges:
            if a >= b:
                raise ValueError(f"edge {(a, b)} is not normalized")
            if a not in self.vertices or b not in self.vertices:
                raise ValueError(f"edge {(a, b)} has an endpoint outside the graph")

    @classmethod
    def new(
        cls,
        vertices: T.Iterable[int] = (),
        edges: T.Iterable[T.Tuple[int, int]] = (),
    ) -> "Graph":
        """
        Build a graph, normalizing edges and adding their endpoints as
        vertices.
        """
        vs = set(vertices)
        es = set()
        for a, b in edges:
            es.add(normalize_edge(a, b))
            vs.add(a)
            vs.add(b)
        return cls(vertices=frozenset(vs), edges=frozenset(es))

    @classmethod
    def path(cls, ids: T.Sequence[int]) -> "Graph":
        return cls.new(ids, zip(ids, ids[1:]))

    @classmethod
    def cycle(cls, ids: T.Sequence[int]) -> "Graph":
        return cls.new(ids, zip(ids, list(ids[1:]) + [ids[0]]))

    @classmethod
    def complete(cls, ids: T.Sequence[int]) -> "Graph":
        ids = list(ids)
        return cls.new(
            ids,
            [(a, b) for i, a in enumerate(ids) for b in ids[i + 1 :]],
        )

    @cached_property
    def adjacency(self) -> T.Dict[int, T.Tuple[int, ...]]:
        """
        Sorted neighbor tuple of every vertex.
        """
        nbrs: T.Dict[int, T.List[int]] = {v: [] for v in self.vertices}
        for a, b in self.edges:
            nbrs[a].append(b)
            nbrs[b].append(a)
        return {v: tuple(sorted(ns)) for v, ns in nbrs.items()}

    def neighbors(self, v: int) -> T.Tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, a: int, b: int) -> bool:
        return a != b and normalize_edge(a, b) in self.edges

    def is_clique(self, vs: T.Iterable[int]) -> bool:
        vs = list(vs)
        return all(
            self.has_edge(a, b) for i, a in enumerate(vs) for b in vs[i + 1 :]
        )

    def is_subgraph_of(self, other: "Graph") -> bool:
        return self.vertices <= other.vertices and self.edges <= other.edges

    def sorted_vertices(self) -> T.List[int]:
        return sorted(self.vertices)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(sorted(self.vertices))
        g.add_edges_from(sorted(self.edges))
        return g

    def __len__(self) -> int:
        return len(self.vertices)


@dataclasses.dataclass(frozen=True)
class Coloring:
    """
    A vertex coloring with colors ``1 .. palette_size``.

    :param assignment: vertex id -> color
    :param palette_size: number of available colors
    """

    assignment: T.Mapping[int, int] = dataclasses.field()
    palette_size: int = dataclasses.field()

    def __post_init__(self):
        for v, c in self.assignment.items():
            if not 1 <= c <= self.palette_size:
                raise ValueError(
                    f"vertex {v} has color {c} outside palette 1..{self.palette_size}"
                )

    @classmethod
    def new(
        cls,
        assignment: T.Mapping[int, int],
        palette_size: T.Optional[int] = None,
    ) -> "Coloring":
        assignment = dict(assignment)
        if palette_size is None:
            palette_size = max(assignment.values(), default=1)
        return cls(assignment=assignment, palette_size=palette_size)

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]

    def is_total_on(self, vertices: T.Iterable[int]) -> bool:
        return all(v in self.assignment for v in vertices)

    def restricted(self, vertices: T.Iterable[int]) -> "Coloring":
        return Coloring(
            assignment={v: self.assignment[v] for v in vertices},
            palette_size=self.palette_size,
        )


@dataclasses.dataclass(frozen=True)
class GameEvent:
    """
    One online step: vertex ``v`` arrives at step ``t``, is joined to every
    vertex of ``attach`` (``D_t``) and the edges in ``delete`` (``C_t``) are
    removed from the previous graph.
    """

    t: int = dataclasses.field()
    v: int = dataclasses.field()
    attach: T.FrozenSet[int] = dataclasses.field(default=frozenset())
    delete: T.FrozenSet[Edge] = dataclasses.field(default=frozenset())

    @classmethod
    def new(
        cls,
        t: int,
        v: int,
        attach: T.Iterable[int] = (),
        delete: T.Iterable[T.Tuple[int, int]] = (),
    ) -> "GameEvent":
        return cls(
            t=t,
            v=v,
            attach=frozenset(attach),
            delete=frozenset(normalize_edge(a, b) for a, b in delete),
        )

    def to_record(self) -> T.Dict[str, T.Any]:
        return {
            "op": "add",
            "v": self.v,
            "attach": sorted(self.attach),
            "delete": [list(e) for e in sorted(self.delete)],
        }

    @classmethod
    def from_record(cls, t: int, record: T.Mapping[str, T.Any]) -> "GameEvent":
        if record.get("op") != "add":
            raise ValueError(f"unknown event op: {record.get('op')!r}")
        return cls.new(
            t=t,
            v=int(record["v"]),
            attach=[int(a) for a in record.get("attach", [])],
            delete=[(int(a), int(b)) for a, b in record.get("delete", [])],
        )


class GraphClass(str, enum.Enum):
    left_to_right_path = "left_to_right_path"
    path = "path"
    tree = "tree"
    cycle = "cycle"
    series_parallel = "series_parallel"
    partial_k_tree = "partial_k_tree"
    k_tree = "k_tree"

    @property
    def needs_k(self) -> bool:
        return self in (GraphClass.partial_k_tree, GraphClass.k_tree)

    @property
    def is_path_like(self) -> bool:
        return self in (GraphClass.left_to_right_path, GraphClass.path)


@dataclasses.dataclass(frozen=True)
class GraphClassRule:
    """
    A graph class together with its online move shapes.

    :param cls: the class tag
    :param k: the width for ``partial_k_tree`` / ``k_tree``; ``None`` otherwise
    """

    cls: GraphClass = dataclasses.field()
    k: T.Optional[int] = dataclasses.field(default=None)

    def __post_init__(self):
        if self.cls.needs_k:
            if self.k is None or self.k < 1:
                raise ValueError(f"{self.cls.value} needs k >= 1, got {self.k}")
        elif self.k is not None:
            raise ValueError(f"{self.cls.value} takes no k, got {self.k}")

    @classmethod
    def new(cls, name: T.Union[str, GraphClass], k: T.Optional[int] = None):
        return cls(cls=GraphClass(name), k=k)

    @property
    def label(self) -> str:
        if self.k is None:
            return self.cls.value
        return f"{self.cls.value}({self.k})"

    def initial_graph(self) -> Graph:
        """
        ``G_0``: a single vertex, except a triangle for cycles and
        ``K_{k+1}`` for k-trees.
        """
        if self.cls == GraphClass.cycle:
            return Graph.complete([1, 2, 3])
        if self.cls == GraphClass.k_tree:
            return Graph.complete(list(range(1, self.k + 2)))
        return Graph.new([1])

    @property
    def partial_width(self) -> int:
        """
        The smallest ``k'`` such that every game of this class is an online
        partial ``k'``-tree game.
        """
        if self.cls.needs_k:
            return self.k
        return 2


@dataclasses.dataclass(frozen=True)
class GameScript:
    """
    A full online game: the rule it is played under, an optional palette size
    hint and the events in order.
    """

    rule: GraphClassRule = dataclasses.field()
    events: T.Tuple[GameEvent, ...] = dataclasses.field(default=())
    palette_size: T.Optional[int] = dataclasses.field(default=None)

    def __len__(self) -> int:
        return len(self.events)

    def prefix(self, n: int) -> "GameScript":
        return dataclasses.replace(self, events=self.events[:n])

    def graphs(self) -> T.List[Graph]:
        """
        Replay the script, returning ``[G_0, G_1, ..., G_n]``.
        """
        g = self.rule.initial_graph()
        out = [g]
        for e in self.events:
            g = apply_event(g, e)
            out.append(g)
        return out

    def final_graph(self) -> Graph:
        return self.graphs()[-1]


def apply_event(g: Graph, e: GameEvent) -> Graph:
    """
    Return ``G_t`` with ``V(G_t) = V(G) + {v_t}`` and
    ``E(G_t) = E(G) + D_t - C_t``.

    Legality under a graph class is not checked here; see
    :func:`online_thue_kit.graph.rules.validate_event`.

    :raises InvalidEvent: when ``v_t`` is not fresh, ``attach`` names a
        missing vertex or ``delete`` names a missing edge
    """
    if e.v in g.vertices:
        raise InvalidEvent(f"step {e.t}: vertex {e.v} already exists")
    missing = e.attach - g.vertices
    if missing:
        raise InvalidEvent(f"step {e.t}: attach to unknown vertices {sorted(missing)}")
    stale = e.delete - g.edges
    if stale:
        raise InvalidEvent(f"step {e.t}: delete unknown edges {sorted(stale)}")
    edges = (g.edges | {normalize_edge(a, e.v) for a in e.attach}) - e.delete
    return Graph(vertices=g.vertices | {e.v}, edges=frozenset(edges))

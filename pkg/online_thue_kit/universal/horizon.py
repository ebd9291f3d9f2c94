# -*- coding: utf-8 -*-

"""
Finite horizons of the universal graphs, relabelled to integer ids
``1 .. n`` in canonical order.
"""

import typing as T
import enum
import dataclasses
from fractions import Fraction

from ..graph.model import Graph
from ..repetition.structures import orient_by_heights
from ..repetition.search import SearchGraph
from .path_graph import OVertexId, build_o, o_stage, o_text
from .ktree import UVertexId, get_universe, build_u, DEFAULT_U_VERTEX_BUDGET


class UniversalKind(str, enum.Enum):
    O = "O"
    U = "U"


@dataclasses.dataclass(frozen=True)
class Target:
    """
    Which universal graph: ``O`` (online paths) or ``U(k)``.
    """

    kind: UniversalKind = dataclasses.field()
    k: T.Optional[int] = dataclasses.field(default=None)

    def __post_init__(self):
        if self.kind == UniversalKind.U:
            if self.k is None or self.k < 1:
                raise ValueError(f"U needs k >= 1, got {self.k}")
        elif self.k is not None:
            raise ValueError("O takes no k")

    @classmethod
    def o(cls) -> "Target":
        return cls(kind=UniversalKind.O)

    @classmethod
    def u(cls, k: int) -> "Target":
        return cls(kind=UniversalKind.U, k=k)

    @classmethod
    def parse(cls, text: str) -> "Target":
        """
        Accepts ``O``, ``U2`` and ``U(2)`` (case-insensitive).
        """
        s = text.strip().upper()
        if s == "O":
            return cls.o()
        if s.startswith("U"):
            digits = s[1:].strip("()")
            if digits.isdigit():
                return cls.u(int(digits))
        raise ValueError(f"unknown universal target {text!r}, expected O or U(k)")

    @property
    def label(self) -> str:
        if self.kind == UniversalKind.O:
            return "O"
        return f"U({self.k})"


@dataclasses.dataclass(frozen=True)
class HorizonGraph:
    """
    Stages ``1 .. horizon`` of a universal graph.

    :param target: which universal graph
    :param horizon: the last stage included
    :param graph: the graph on ids ``1 .. n``
    :param keys: id ``i`` is ``keys[i - 1]``, a height for O or a handle
        for U
    :param texts: canonical text of every id, same indexing as ``keys``
    :param stages: stage of every id, same indexing as ``keys``
    :param heights: id -> height (O only)
    """

    target: Target = dataclasses.field()
    horizon: int = dataclasses.field()
    graph: Graph = dataclasses.field()
    keys: T.Tuple[T.Union[OVertexId, UVertexId], ...] = dataclasses.field()
    texts: T.Tuple[str, ...] = dataclasses.field()
    stages: T.Tuple[int, ...] = dataclasses.field()
    heights: T.Optional[T.Mapping[int, Fraction]] = dataclasses.field(default=None)

    @property
    def ids(self) -> range:
        return range(1, len(self.keys) + 1)

    def id_of_text(self) -> T.Dict[str, int]:
        return {text: i for i, text in enumerate(self.texts, start=1)}

    def stage_of(self, i: int) -> int:
        return self.stages[i - 1]

    def text_of(self, i: int) -> str:
        return self.texts[i - 1]

    def search_graph(self, vertical: bool) -> SearchGraph:
        """
        Height-monotone paths for O when ``vertical``, every path otherwise.
        """
        if vertical:
            if self.heights is None:
                raise ValueError(f"{self.target.label} has no heights")
            return SearchGraph.from_digraph(orient_by_heights(self.graph, self.heights))
        return SearchGraph.undirected(self.graph)


def materialize_o(d: int) -> HorizonGraph:
    built = build_o(d)
    id_of = {q: i for i, q in enumerate(built.vertices, start=1)}
    graph = Graph.new(
        id_of.values(),
        [(id_of[a], id_of[b]) for a, b in built.edges],
    )
    return HorizonGraph(
        target=Target.o(),
        horizon=d,
        graph=graph,
        keys=built.vertices,
        texts=tuple(o_text(q) for q in built.vertices),
        stages=tuple(o_stage(q) for q in built.vertices),
        heights={i: q for q, i in id_of.items()},
    )


def materialize_u(
    k: int,
    d: int,
    vertex_budget: int = DEFAULT_U_VERTEX_BUDGET,
) -> HorizonGraph:
    universe = get_universe(k)
    built = build_u(k, d, vertex_budget)
    id_of = {h: i for i, h in enumerate(built.vertices, start=1)}
    graph = Graph.new(
        id_of.values(),
        [(id_of[a], id_of[b]) for a, b in built.edges],
    )
    return HorizonGraph(
        target=Target.u(k),
        horizon=d,
        graph=graph,
        keys=built.vertices,
        texts=tuple(universe.text(h) for h in built.vertices),
        stages=tuple(universe.stage(h) for h in built.vertices),
    )


def materialize(target: Target, d: int) -> HorizonGraph:
    if target.kind == UniversalKind.O:
        return materialize_o(d)
    return materialize_u(target.k, d)

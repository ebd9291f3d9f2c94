# -*- coding: utf-8 -*-

"""
Line-delimited JSON files for scripts, graphs and colorings.

Every writer emits sets in sorted order with compact separators, so reading a
file and writing it back gives the same bytes.

Script file::

    {"class":"path","k":null,"palette":12}
    {"op":"add","v":2,"attach":[1],"delete":[]}
    {"op":"add","v":3,"attach":[1,2],"delete":[[1,2]]}

Graph file (``height`` and ``root`` are optional, ``e`` is an arc ``a -> b``
when the header says ``"directed":true``)::

    {"kind":"graph","directed":false,"root":null}
    {"v":1,"height":"1/2"}
    {"e":[1,2]}

Coloring file::

    {"v":1,"color":3}
"""

import typing as T
import dataclasses
from fractions import Fraction
from pathlib import Path

from ..exc import InvalidScript
from ..utils import dumps_line, iter_records
from .model import Graph, Coloring, GameEvent, GameScript, GraphClassRule

if T.TYPE_CHECKING:  # pragma: no cover
    from ..repetition.structures import Digraph, RootedTree


# ------------------------------------------------------------------------------
# Script
# ------------------------------------------------------------------------------
def dumps_script(script: GameScript) -> str:
    header = {
        "class": script.rule.cls.value,
        "k": script.rule.k,
        "palette": script.palette_size,
    }
    lines = [dumps_line(header)]
    lines.extend(dumps_line(e.to_record()) for e in script.events)
    return "\n".join(lines) + "\n"


def loads_script(text: str) -> GameScript:
    """
    :raises InvalidScript: on a missing or malformed header or event line
    """
    records = iter_records(text)
    try:
        header = next(records)
    except StopIteration:
        raise InvalidScript("empty script file")
    except ValueError as e:
        raise InvalidScript(str(e)) from e
    try:
        rule = GraphClassRule.new(header["class"], header.get("k"))
    except (KeyError, ValueError) as e:
        raise InvalidScript(f"bad script header {header!r}: {e}") from e
    events = []
    try:
        for t, record in enumerate(records, start=1):
            events.append(GameEvent.from_record(t, record))
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidScript(f"bad event line: {e}") from e
    return GameScript(
        rule=rule,
        events=tuple(events),
        palette_size=header.get("palette"),
    )


def write_script(path: Path, script: GameScript):
    Path(path).write_text(dumps_script(script))


def read_script(path: Path) -> GameScript:
    return loads_script(Path(path).read_text())


# ------------------------------------------------------------------------------
# Graph
# ------------------------------------------------------------------------------
@dataclasses.dataclass(frozen=True)
class GraphDocument:
    """
    The content of a graph file.

    :param vertices: vertex ids
    :param edges: undirected ``(low, high)`` pairs, or arcs when ``directed``
    :param directed: whether ``edges`` are arcs
    :param heights: optional vertex height, used to orient edges for the
        vertical mode of graphs that are not trees
    :param root: optional root, used for the vertical mode of trees
    """

    vertices: T.Tuple[int, ...] = dataclasses.field()
    edges: T.Tuple[T.Tuple[int, int], ...] = dataclasses.field()
    directed: bool = dataclasses.field(default=False)
    heights: T.Optional[T.Mapping[int, Fraction]] = dataclasses.field(default=None)
    root: T.Optional[int] = dataclasses.field(default=None)

    @classmethod
    def from_graph(
        cls,
        g: Graph,
        heights: T.Optional[T.Mapping[int, Fraction]] = None,
        root: T.Optional[int] = None,
    ) -> "GraphDocument":
        return cls(
            vertices=tuple(sorted(g.vertices)),
            edges=tuple(sorted(g.edges)),
            heights=heights,
            root=root,
        )

    @classmethod
    def from_digraph(cls, d: "Digraph") -> "GraphDocument":
        return cls(
            vertices=tuple(sorted(d.vertices)),
            edges=tuple(sorted(d.arcs)),
            directed=True,
        )

    def graph(self) -> Graph:
        """
        The underlying undirected graph (arcs lose their direction).
        """
        return Graph.new(self.vertices, self.edges)

    def digraph(self) -> "Digraph":
        """
        The arcs of a directed file, or both directions of every edge of an
        undirected one.
        """
        from ..repetition.structures import Digraph

        if self.directed:
            return Digraph.new(self.vertices, self.edges)
        return Digraph.bidirected(self.graph())

    def rooted_tree(self) -> "RootedTree":
        from ..repetition.structures import RootedTree

        if self.root is None:
            raise ValueError("graph file declares no root")
        return RootedTree.new(self.graph(), self.root)


def _height_text(q: Fraction) -> str:
    return str(q)


def dumps_graph(doc: GraphDocument) -> str:
    lines = [
        dumps_line({"kind": "graph", "directed": doc.directed, "root": doc.root})
    ]
    for v in sorted(doc.vertices):
        record: T.Dict[str, T.Any] = {"v": v}
        if doc.heights is not None and v in doc.heights:
            record["height"] = _height_text(doc.heights[v])
        lines.append(dumps_line(record))
    for a, b in sorted(doc.edges):
        lines.append(dumps_line({"e": [a, b]}))
    return "\n".join(lines) + "\n"


def loads_graph(text: str) -> GraphDocument:
    records = list(iter_records(text))
    if not records or records[0].get("kind") != "graph":
        raise ValueError("graph file must start with a {\"kind\":\"graph\"} header")
    header = records[0]
    vertices: T.List[int] = []
    edges: T.List[T.Tuple[int, int]] = []
    heights: T.Dict[int, Fraction] = {}
    for record in records[1:]:
        if "v" in record:
            v = int(record["v"])
            vertices.append(v)
            if "height" in record:
                heights[v] = Fraction(record["height"])
        elif "e" in record:
            a, b = record["e"]
            edges.append((int(a), int(b)))
        else:
            raise ValueError(f"unknown graph record {record!r}")
    directed = bool(header.get("directed", False))
    if not directed:
        edges = [(a, b) if a < b else (b, a) for a, b in edges]
    return GraphDocument(
        vertices=tuple(sorted(set(vertices))),
        edges=tuple(sorted(set(edges))),
        directed=directed,
        heights=heights or None,
        root=header.get("root"),
    )


def write_graph(path: Path, doc: GraphDocument):
    Path(path).write_text(dumps_graph(doc))


def read_graph(path: Path) -> GraphDocument:
    return loads_graph(Path(path).read_text())


# ------------------------------------------------------------------------------
# Coloring
# ------------------------------------------------------------------------------
def dumps_coloring(c: Coloring) -> str:
    return "".join(
        dumps_line({"v": v, "color": c.assignment[v]}) + "\n"
        for v in sorted(c.assignment)
    )


def loads_coloring(text: str, palette_size: T.Optional[int] = None) -> Coloring:
    assignment = {}
    for record in iter_records(text):
        assignment[int(record["v"])] = int(record["color"])
    return Coloring.new(assignment, palette_size)


def write_coloring(path: Path, c: Coloring):
    Path(path).write_text(dumps_coloring(c))


def read_coloring(path: Path, palette_size: T.Optional[int] = None) -> Coloring:
    return loads_coloring(Path(path).read_text(), palette_size)

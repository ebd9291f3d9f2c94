# -*- coding: utf-8 -*-

"""
Repetitions through one vertex.

Fix a vertex ``v`` sitting at position ``p`` of the first half of a square
``x_1 .. x_2l``. The stretch ``x_p .. x_{p+l}`` (the *segment*) starts at ``v``
and ends at the vertex that must carry ``v``'s color. Once the segment is
known every other vertex of the square has a forced color:

- ``x_{p-1} .. x_1`` walk backwards from ``v`` with the colors of
  ``x_{p+l-1} .. x_{l+1}``
- ``x_{p+l+1} .. x_2l`` walk forwards from the segment end with the colors of
  ``x_{p+1} .. x_l``

so the search enumerates segments and then follows color-forced walks, which
are short and heavily pruned. A square with ``v`` in its second half is a
square with ``v`` in its first half read backwards; undirected graphs get it
for free, digraphs get a second pass over the reversed arcs.

Vertices missing from the ``colors`` mapping are treated as absent.
"""

import typing as T
import dataclasses

from ..graph.model import Graph
from .structures import Adjacency, Digraph
from .witness import RepetitionWitness


@dataclasses.dataclass(frozen=True)
class SearchGraph:
    """
    Neighbor maps a repetition search walks on.

    :param vertices: every vertex, in canonical (sorted) order
    :param succ: out-neighbors (all neighbors when undirected), sorted
    :param pred: in-neighbors (all neighbors when undirected), sorted
    :param directed: whether paths must follow arcs
    """

    vertices: T.Tuple[int, ...] = dataclasses.field()
    succ: Adjacency = dataclasses.field()
    pred: Adjacency = dataclasses.field()
    directed: bool = dataclasses.field(default=False)

    @classmethod
    def undirected(cls, g: Graph) -> "SearchGraph":
        adj = g.adjacency
        return cls(vertices=tuple(sorted(g.vertices)), succ=adj, pred=adj)

    @classmethod
    def from_adjacency(cls, adj: T.Mapping[int, T.Iterable[int]]) -> "SearchGraph":
        """
        Undirected search graph over a plain ``vertex -> neighbors`` mapping
        (which must be symmetric).
        """
        frozen = {v: tuple(sorted(ns)) for v, ns in adj.items()}
        return cls(vertices=tuple(sorted(frozen)), succ=frozen, pred=frozen)

    @classmethod
    def from_digraph(cls, d: Digraph) -> "SearchGraph":
        return cls(
            vertices=tuple(sorted(d.vertices)),
            succ=d.succ,
            pred=d.pred,
            directed=True,
        )

    def reversed(self) -> "SearchGraph":
        return dataclasses.replace(self, succ=self.pred, pred=self.succ)

    def adjacent(self, a: int, b: int) -> bool:
        """
        Whether a path may step from ``a`` to ``b``.
        """
        return b in self.succ.get(a, ())

    def __len__(self) -> int:
        return len(self.vertices)


def _segments(
    succ: Adjacency,
    colors: T.Mapping[int, int],
    v: int,
    max_edges: int,
) -> T.Iterator[T.Tuple[int, ...]]:
    """
    Every simple walk ``v, y_1 .. y_l`` with ``1 <= l <= max_edges`` through
    colored vertices, in depth-first order.
    """
    path = [v]
    on_path = {v}

    def grow() -> T.Iterator[T.Tuple[int, ...]]:
        if len(path) > max_edges:
            return
        for u in succ.get(path[-1], ()):
            if u in on_path or u not in colors:
                continue
            path.append(u)
            on_path.add(u)
            yield tuple(path)
            yield from grow()
            path.pop()
            on_path.discard(u)

    return grow()


def _forced_walks(
    adj: Adjacency,
    colors: T.Mapping[int, int],
    start: int,
    wanted: T.Sequence[int],
    used: T.Set[int],
) -> T.Iterator[T.List[int]]:
    """
    Every simple walk from ``start`` (excluded) whose i-th vertex has color
    ``wanted[i]`` and avoids ``used``.
    """
    if not wanted:
        yield []
        return
    walk: T.List[int] = []
    taken = set(used)

    def grow(frm: int) -> T.Iterator[T.List[int]]:
        i = len(walk)
        if i == len(wanted):
            yield list(walk)
            return
        for u in adj.get(frm, ()):
            if u in taken or colors.get(u) != wanted[i]:
                continue
            walk.append(u)
            taken.add(u)
            yield from grow(u)
            walk.pop()
            taken.discard(u)

    yield from grow(start)


def _square_for_segment(
    sg: SearchGraph,
    colors: T.Mapping[int, int],
    seg: T.Tuple[int, ...],
) -> T.Optional[T.Tuple[int, ...]]:
    """
    Complete ``seg`` (which starts at the vertex under test) into a square,
    trying positions ``p = 1 .. l`` in order. Returns the first completion.
    """
    half = len(seg) - 1
    seg_colors = [colors.get(x) for x in seg]
    used = set(seg)
    for p in range(1, half + 1):
        back_wanted = [seg_colors[half - j] for j in range(1, p)]
        fwd_wanted = seg_colors[1 : half - p + 1]
        for back in _forced_walks(sg.pred, colors, seg[0], back_wanted, used):
            fwd = next(
                _forced_walks(sg.succ, colors, seg[-1], fwd_wanted, used | set(back)),
                None,
            )
            if fwd is not None:
                return tuple(reversed(back)) + seg + tuple(fwd)
    return None


def _passes(sg: SearchGraph) -> T.List[SearchGraph]:
    if sg.directed:
        return [sg, sg.reversed()]
    return [sg]


def _max_edges(sg: SearchGraph, max_half: T.Optional[int]) -> int:
    limit = len(sg.vertices) // 2
    if max_half is None:
        return limit
    return min(max_half, limit)


def forbidden_colors_through(
    sg: SearchGraph,
    colors: T.Mapping[int, int],
    v: int,
    max_half: T.Optional[int] = None,
    palette_size: T.Optional[int] = None,
) -> T.Set[int]:
    """
    Every color that, given to the uncolored vertex ``v``, closes a
    repetition through ``v`` among the colored vertices.

    The completion of a segment does not depend on ``v``'s own color, so one
    enumeration serves all candidate colors.

    :param max_half: only squares of half length ``<= max_half``
    :param palette_size: stop once every color ``1 .. palette_size`` is
        forbidden
    """
    forbidden: T.Set[int] = set()
    max_edges = _max_edges(sg, max_half)
    for one_pass in _passes(sg):
        for seg in _segments(one_pass.succ, colors, v, max_edges):
            c = colors[seg[-1]]
            if c in forbidden:
                continue
            if _square_for_segment(one_pass, colors, seg) is not None:
                forbidden.add(c)
                if palette_size is not None and len(forbidden) >= palette_size:
                    return forbidden
    return forbidden


def find_repetition_through(
    sg: SearchGraph,
    colors: T.Mapping[int, int],
    v: int,
    max_half: T.Optional[int] = None,
) -> T.Optional[RepetitionWitness]:
    """
    A repetition whose path contains the colored vertex ``v``, or ``None``.

    Among the completions found (one per segment and pass) the shortest one
    wins, ties broken by vertex sequence; undirected paths are compared in
    their smaller orientation.
    """
    target = colors[v]
    best: T.Optional[T.Tuple[int, ...]] = None
    max_edges = _max_edges(sg, max_half)
    for i, one_pass in enumerate(_passes(sg)):
        for seg in _segments(one_pass.succ, colors, v, max_edges):
            if colors[seg[-1]] != target:
                continue
            if best is not None and len(seg) - 1 > len(best) // 2:
                continue
            path = _square_for_segment(one_pass, colors, seg)
            if path is None:
                continue
            if i == 1:
                # found on reversed arcs
                path = path[::-1]
            elif not sg.directed:
                path = min(path, path[::-1])
            if best is None or (len(path), path) < (len(best), best):
                best = path
    if best is None:
        return None
    return RepetitionWitness.new(best)


def has_repetition(
    sg: SearchGraph,
    colors: T.Mapping[int, int],
    order: T.Optional[T.Sequence[int]] = None,
    max_half: T.Optional[int] = None,
) -> T.Optional[RepetitionWitness]:
    """
    Replay the coloring vertex by vertex along ``order`` and look for a
    repetition through each newly placed vertex.

    Every square has a last-placed vertex, so this finds a repetition exactly
    when one exists. The witness returned is the first one met, not the
    canonical one.
    """
    if order is None:
        order = [v for v in sg.vertices if v in colors]
    placed: T.Dict[int, int] = {}
    for v in order:
        placed[v] = colors[v]
        w = find_repetition_through(sg, placed, v, max_half)
        if w is not None:
            return w
    return None

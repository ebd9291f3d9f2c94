# -*- coding: utf-8 -*-

"""
Exhaustive nonrepetitive coloring by backtracking, and the exact minimum
palette size of small graphs.
"""

import typing as T
import enum
import logging
from fractions import Fraction

from ..exc import SizeGuard, BudgetExceeded
from ..graph.model import Graph
from .structures import Digraph, RootedTree, orient_by_heights
from .search import SearchGraph, forbidden_colors_through

logger = logging.getLogger(__name__)


class CheckMode(str, enum.Enum):
    """
    Which paths must be nonrepetitive.
    """

    full = "full"
    vertical = "vertical"
    directed = "directed"


MIN_COLORS_VERTEX_BUDGET = {
    CheckMode.full: 16,
    CheckMode.vertical: 24,
    CheckMode.directed: 16,
}


def search_graph_for(
    g: T.Union[Graph, Digraph, RootedTree],
    mode: T.Union[str, CheckMode] = CheckMode.full,
    heights: T.Optional[T.Mapping[int, Fraction]] = None,
) -> SearchGraph:
    """
    Build the search graph of ``mode``:

    - ``full``: every path of an undirected graph
    - ``vertical``: the paths of a rooted tree between a vertex and its
      ancestor, or the height-monotone paths of a graph with heights
    - ``directed``: the directed paths of a digraph (an undirected graph is
      bidirected first)
    """
    mode = CheckMode(mode)
    if mode == CheckMode.full:
        if not isinstance(g, Graph):
            raise TypeError(f"full mode needs a Graph, got {type(g).__name__}")
        return SearchGraph.undirected(g)
    if mode == CheckMode.vertical:
        if isinstance(g, RootedTree):
            return SearchGraph.from_digraph(g.to_digraph())
        if isinstance(g, Graph) and heights is not None:
            return SearchGraph.from_digraph(orient_by_heights(g, heights))
        raise TypeError("vertical mode needs a RootedTree or a Graph with heights")
    if isinstance(g, Graph):
        g = Digraph.bidirected(g)
    if not isinstance(g, Digraph):
        raise TypeError(f"directed mode needs a Digraph, got {type(g).__name__}")
    return SearchGraph.from_digraph(g)


class Backtracker:
    """
    Depth-first colorer over a fixed vertex order.

    Each placed vertex only has to avoid the repetitions through itself, so a
    branch dies as soon as every color is forbidden.

    :param sg: the search graph
    :param order: vertex order, usually canonical
    :param palette_size: colors ``1 .. palette_size``
    :param max_half: only squares of half length ``<= max_half``
    :param break_symmetry: a vertex may open at most one new color, which is
        sound whenever colors are interchangeable
    :param node_cap: give up with :class:`BudgetExceeded` after this many
        placements
    """

    def __init__(
        self,
        sg: SearchGraph,
        order: T.Sequence[int],
        palette_size: int,
        max_half: T.Optional[int] = None,
        break_symmetry: bool = False,
        node_cap: T.Optional[int] = None,
    ):
        if palette_size < 1:
            raise ValueError(f"palette_size must be >= 1, got {palette_size}")
        self.sg = sg
        self.order = list(order)
        self.palette_size = palette_size
        self.max_half = max_half
        self.break_symmetry = break_symmetry
        self.node_cap = node_cap
        self.nodes = 0

    def run(self) -> T.Optional[T.Dict[int, int]]:
        """
        :returns: a coloring, or ``None`` when the search space is exhausted
        """
        colors: T.Dict[int, int] = {}
        if self._place(0, 0, colors):
            return colors
        return None

    def _place(self, i: int, max_used: int, colors: T.Dict[int, int]) -> bool:
        if i == len(self.order):
            return True
        v = self.order[i]
        forbidden = forbidden_colors_through(
            self.sg, colors, v, self.max_half, self.palette_size
        )
        limit = self.palette_size
        if self.break_symmetry:
            limit = min(limit, max_used + 1)
        for color in range(1, limit + 1):
            if color in forbidden:
                continue
            self.nodes += 1
            if self.node_cap is not None and self.nodes > self.node_cap:
                raise BudgetExceeded(
                    f"backtracking passed {self.node_cap} placements"
                )
            colors[v] = color
            if self._place(i + 1, max(max_used, color), colors):
                return True
            del colors[v]
        return False


def connected_order(sg: SearchGraph) -> T.List[int]:
    """
    Breadth-first order from the smallest vertex of each component, following
    edges in both directions. Placing neighbors early prunes sooner.
    """
    seen: T.Set[int] = set()
    order: T.List[int] = []
    for s in sg.vertices:
        if s in seen:
            continue
        seen.add(s)
        queue = [s]
        i = 0
        while i < len(queue):
            v = queue[i]
            i += 1
            for u in sorted(set(sg.succ.get(v, ())) | set(sg.pred.get(v, ()))):
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        order.extend(queue)
    return order


def min_colors(
    g: T.Union[Graph, Digraph, RootedTree],
    mode: T.Union[str, CheckMode] = CheckMode.full,
    heights: T.Optional[T.Mapping[int, Fraction]] = None,
    vertex_budget: T.Optional[int] = None,
) -> int:
    """
    Exact least palette size with a nonrepetitive coloring in ``mode``.

    :raises SizeGuard: when the graph exceeds the vertex budget of ``mode``
        (16 full, 24 vertical, 16 directed by default)
    """
    mode = CheckMode(mode)
    sg = search_graph_for(g, mode, heights)
    if vertex_budget is None:
        vertex_budget = MIN_COLORS_VERTEX_BUDGET[mode]
    n = len(sg)
    if n > vertex_budget:
        raise SizeGuard(
            f"min_colors on {n} vertices exceeds the {mode.value} budget of {vertex_budget}"
        )
    if n == 0:
        return 1
    order = connected_order(sg)
    palette_size = 1
    while True:
        bt = Backtracker(sg, order, palette_size, break_symmetry=True)
        if bt.run() is not None:
            logger.debug(
                "min_colors: %d colors suffice (%d placements)", palette_size, bt.nodes
            )
            return palette_size
        logger.debug("min_colors: %d colors fail (%d placements)", palette_size, bt.nodes)
        palette_size += 1

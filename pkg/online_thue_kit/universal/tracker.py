# -*- coding: utf-8 -*-

"""
One session's view of the universal graph: where every game vertex went.

Path classes may go straight into ``O``. Every class may go into ``U(k')``
through the partial-to-full reduction: the initial graph is replayed as
prefix events, deletions are dropped and attach sets are grown to
``k'``-cliques of the augmented k-tree, whose vertices are then embedded
one by one.
"""

import typing as T
import logging
from fractions import Fraction

from ..exc import IncompatibleOracle
from ..graph.model import GameEvent, GraphClass, GraphClassRule
from ..graph.reduction import PartialReducer, g0_as_events
from ..repetition.search import SearchGraph
from .horizon import Target, UniversalKind
from .path_graph import OVertexId, o_adjacent, o_depth, o_stage, o_text
from .ktree import UVertexId, get_universe
from .embedding import (
    KTreeEmbedding,
    PathEmbedding,
    embed_ktree_step,
    embed_path_step,
    preview_ktree_image,
    preview_path_image,
)

logger = logging.getLogger(__name__)


def check_compatible(rule: GraphClassRule, target: Target):
    """
    :raises IncompatibleOracle: when games of ``rule`` do not embed into
        ``target``
    """
    if target.kind == UniversalKind.O:
        if rule.cls.is_path_like:
            return
        raise IncompatibleOracle(f"{rule.label} games do not embed into O")
    needed = rule.partial_width
    if rule.cls == GraphClass.left_to_right_path:
        needed = 1
    if target.k < needed:
        raise IncompatibleOracle(
            f"{rule.label} games need U(k) with k >= {needed}, got {target.label}"
        )


def default_target(rule: GraphClassRule) -> Target:
    """
    ``O`` for path classes, the smallest hosting ``U(k)`` otherwise.
    """
    if rule.cls.is_path_like:
        return Target.o()
    return Target.u(rule.partial_width)


def o_neighbors_among(
    q: OVertexId,
    by_height: T.Mapping[OVertexId, int],
    max_depth: int,
) -> T.List[int]:
    """
    Committed vertices whose heights are adjacent to ``q`` in ``O``: the two
    ends of ``q``'s own interval, and deeper heights whose intervals end at
    ``q``.
    """
    out = set()
    for s in range(o_depth(q), max(max_depth, o_depth(q)) + 1):
        step = Fraction(1, 2 ** s)
        for r in (q - step, q + step):
            if r in by_height and o_adjacent(q, r):
                out.add(by_height[r])
    return sorted(out)


class UniversalTracker:
    """
    Tracks the images of the game vertices of one session.

    :param rule: the game's class rule
    :param target: the universal graph to embed into
    """

    def __init__(self, rule: GraphClassRule, target: T.Optional[Target] = None):
        if target is None:
            target = default_target(rule)
        check_compatible(rule, target)
        self.rule = rule
        self.target = target
        if target.kind == UniversalKind.O:
            self._path = PathEmbedding.start()
            self._by_height: T.Dict[OVertexId, int] = {Fraction(0): 1}
            self._o_adj: T.Dict[int, T.Set[int]] = {1: set()}
            self._max_depth = 0
        else:
            self.universe = get_universe(target.k)
            self.reducer = PartialReducer(target.k)
            self._ktree = KTreeEmbedding.start(self.universe, [1])
            for e in g0_as_events(rule):
                self.push(e)

    @property
    def is_path_target(self) -> bool:
        return self.target.kind == UniversalKind.O

    @property
    def images(self) -> T.Mapping[int, T.Union[OVertexId, UVertexId]]:
        if self.is_path_target:
            return self._path.images
        return self._ktree.images

    @property
    def embedding(self) -> T.Union[PathEmbedding, KTreeEmbedding]:
        if self.is_path_target:
            return self._path
        return self._ktree

    def image(self, v: int) -> T.Union[OVertexId, UVertexId]:
        return self.images[v]

    def stage_of_image(self, image: T.Union[OVertexId, UVertexId]) -> int:
        if self.is_path_target:
            return o_stage(image)
        return self.universe.stage(image)

    def stage(self, v: int) -> int:
        return self.stage_of_image(self.images[v])

    def text(self, v: int) -> str:
        """
        Canonical text of ``v``'s image, the key frozen palettes use.
        """
        image = self.images[v]
        if self.is_path_target:
            return o_text(image)
        return self.universe.text(image)

    def preview_image(self, e: GameEvent) -> T.Union[OVertexId, UVertexId]:
        if self.is_path_target:
            return preview_path_image(self._path, e)
        full = self.reducer.preview(e)
        if full is None:
            return self.universe.base(e.v - 1)
        return preview_ktree_image(
            self._ktree, GameEvent.new(t=e.t, v=e.v, attach=full)
        )

    def preview(self, e: GameEvent) -> int:
        """
        The stage ``e``'s vertex would be embedded at; nothing is recorded.
        """
        return self.stage_of_image(self.preview_image(e))

    def push(self, e: GameEvent) -> T.Union[OVertexId, UVertexId]:
        """
        Embed the vertex of the (already validated) event ``e``.

        :returns: its image
        """
        if self.is_path_target:
            self._path, image = embed_path_step(self._path, None, e)
            neighbors = o_neighbors_among(image, self._by_height, self._max_depth)
            self._by_height[image] = e.v
            self._max_depth = max(self._max_depth, o_depth(image))
            self._o_adj[e.v] = set(neighbors)
            for u in neighbors:
                self._o_adj[u].add(e.v)
            return image
        full = self.reducer.push(e)
        if full is None:
            self._ktree = self._ktree.with_base(e.v)
            return self._ktree.images[e.v]
        self._ktree, image = embed_ktree_step(self._ktree, None, full)
        return image

    def committed_search_graph(self) -> SearchGraph:
        """
        The universal subgraph spanned by the images so far, on game vertex
        ids. For ``O`` edges point from the higher to the lower height, so
        its paths are the vertical ones; for ``U`` it is the augmented
        k-tree of the reduction.
        """
        if self.is_path_target:
            heights = self._path.images
            succ = {
                v: tuple(sorted(u for u in ns if heights[u] < heights[v]))
                for v, ns in self._o_adj.items()
            }
            pred = {
                v: tuple(sorted(u for u in ns if heights[u] > heights[v]))
                for v, ns in self._o_adj.items()
            }
            return SearchGraph(
                vertices=tuple(sorted(self._o_adj)),
                succ=succ,
                pred=pred,
                directed=True,
            )
        return SearchGraph.from_adjacency(self.reducer.adjacency())

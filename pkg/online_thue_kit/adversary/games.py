# -*- coding: utf-8 -*-

"""
Seeded random online games for every graph class.
"""

import typing as T
import random
import itertools
import logging

from ..exc import OnlineThueError
from ..graph.model import Graph, GameEvent, GameScript, GraphClass, GraphClassRule, apply_event
from ..universal.horizon import Target
from ..universal.tracker import UniversalTracker

logger = logging.getLogger(__name__)

#: random candidates tried per step before a horizon-confined game stops
DEFAULT_HORIZON_RETRIES = 64


class _Mover:
    """
    Draws random legal moves for one class, keeping the k-cliques of
    k-tree games so attach sets are drawn uniformly.
    """

    def __init__(self, rule: GraphClassRule, rng: random.Random):
        self.rule = rule
        self.rng = rng
        self.cliques: T.List[T.Tuple[int, ...]] = []
        if rule.cls == GraphClass.k_tree:
            base = rule.initial_graph().sorted_vertices()
            self.cliques = list(itertools.combinations(base, rule.k))

    def _edge(self, g: Graph) -> T.Tuple[int, int]:
        return self.rng.choice(sorted(g.edges))

    def _subdivide(self, t: int, v: int, g: Graph) -> GameEvent:
        a, b = self._edge(g)
        return GameEvent.new(t=t, v=v, attach=(a, b), delete=[(a, b)])

    def _random_clique(self, g: Graph, size: int) -> T.List[int]:
        vertices = g.sorted_vertices()
        clique = [self.rng.choice(vertices)]
        while len(clique) < size:
            common = set(g.neighbors(clique[0]))
            for u in clique[1:]:
                common &= set(g.neighbors(u))
            if not common:
                break
            clique.append(self.rng.choice(sorted(common)))
        return clique

    def propose(self, t: int, g: Graph) -> GameEvent:
        v = max(g.vertices) + 1
        cls = self.rule.cls
        rng = self.rng
        if cls == GraphClass.left_to_right_path:
            return GameEvent.new(t=t, v=v, attach=[max(g.vertices)])
        if cls == GraphClass.path:
            ends = [u for u in g.sorted_vertices() if g.degree(u) <= 1]
            if g.edges and rng.random() < 0.5:
                return self._subdivide(t, v, g)
            return GameEvent.new(t=t, v=v, attach=[rng.choice(ends)])
        if cls == GraphClass.tree:
            if g.edges and rng.random() < 0.5:
                return self._subdivide(t, v, g)
            return GameEvent.new(t=t, v=v, attach=[rng.choice(g.sorted_vertices())])
        if cls == GraphClass.cycle:
            return self._subdivide(t, v, g)
        if cls == GraphClass.series_parallel:
            r = rng.random()
            if g.edges and r < 1 / 3:
                return self._subdivide(t, v, g)
            if g.edges and r < 2 / 3:
                a, b = self._edge(g)
                return GameEvent.new(t=t, v=v, attach=(a, b))
            return GameEvent.new(t=t, v=v, attach=[rng.choice(g.sorted_vertices())])
        if cls == GraphClass.partial_k_tree:
            clique = self._random_clique(g, rng.randint(1, self.rule.k))
            delete = []
            if g.edges and rng.random() < 0.3:
                delete.append(self._edge(g))
            return GameEvent.new(t=t, v=v, attach=clique, delete=delete)
        if cls == GraphClass.k_tree:
            q = rng.choice(self.cliques)
            return GameEvent.new(t=t, v=v, attach=q)
        raise NotImplementedError(cls)  # pragma: no cover

    def accept(self, e: GameEvent):
        if self.rule.cls == GraphClass.k_tree:
            q = tuple(sorted(e.attach))
            for i in range(len(q)):
                self.cliques.append(tuple(sorted(q[:i] + q[i + 1 :] + (e.v,))))


def random_game(
    rule: GraphClassRule,
    n: int,
    seed: int,
    horizon: T.Optional[int] = None,
    target: T.Optional[Target] = None,
    retries: int = DEFAULT_HORIZON_RETRIES,
) -> GameScript:
    """
    Draw ``n`` random legal events under ``rule``; equal seeds give equal
    scripts.

    :param horizon: keep every image at stage ``<= horizon`` of ``target``
        (default: ``O`` for path classes, the smallest hosting ``U(k)``
        otherwise). Each step tries up to ``retries`` candidates; the game
        stops early when none fits.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    rng = random.Random(seed)
    mover = _Mover(rule, rng)
    tracker = None
    if horizon is not None:
        tracker = UniversalTracker(rule, target)
    g = rule.initial_graph()
    events: T.List[GameEvent] = []
    for t in range(1, n + 1):
        e = mover.propose(t, g)
        if tracker is not None:
            for _ in range(retries):
                try:
                    if tracker.preview(e) <= horizon:
                        break
                except OnlineThueError:
                    pass
                e = mover.propose(t, g)
            else:
                logger.debug("random_game: no move within horizon %d at step %d", horizon, t)
                break
            tracker.push(e)
        mover.accept(e)
        g = apply_event(g, e)
        events.append(e)
    return GameScript(rule=rule, events=tuple(events))

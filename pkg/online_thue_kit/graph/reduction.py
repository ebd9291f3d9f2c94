# -*- coding: utf-8 -*-

"""
Reduction of online games to online (non-partial) k-trees.

Coloring a subgraph nonrepetitively needs only a subset of the conditions, so
a partial k-tree game may be replaced by a k-tree game on a supergraph:
deletions are dropped and every attach set is grown into a k-clique of the
augmented graph. Trees, cycles and series-parallel graphs are partial
2-tree games once their initial clique is spelled out as prefix events.

The augmented graph is always a k-tree, where every clique with fewer than
``k + 1`` vertices extends to a k-clique, so the greedy smallest-id
extension never gets stuck.
"""

import typing as T
import dataclasses

from ..exc import InvalidScript
from .model import (
    Graph,
    GameEvent,
    GameScript,
    GraphClass,
    GraphClassRule,
    apply_event,
)
from .rules import validate_event


def g0_as_events(rule: GraphClassRule) -> T.List[GameEvent]:
    """
    Spell the initial clique of ``rule`` (``1 .. m``) as prefix events of a
    game that starts from the single vertex ``1``.
    """
    m = len(rule.initial_graph())
    return [
        GameEvent.new(t=v - 1, v=v, attach=range(1, v))
        for v in range(2, m + 1)
    ]


def to_partial_events(script: GameScript, width: T.Optional[int] = None) -> GameScript:
    """
    Rewrite ``script`` as an online partial ``width``-tree script.

    :param width: defaults to the smallest width that hosts the class
        (``k`` for (partial) k-trees, 2 otherwise)
    """
    rule = script.rule
    if width is None:
        width = rule.partial_width
    prefix = g0_as_events(rule)
    if len(prefix) > width:
        raise ValueError(
            f"{rule.label} starts from a clique of {len(prefix) + 1} vertices, "
            f"too large for partial {width}-trees"
        )
    shift = len(prefix)
    events = tuple(prefix) + tuple(
        dataclasses.replace(e, t=e.t + shift) for e in script.events
    )
    return GameScript(
        rule=GraphClassRule(cls=GraphClass.partial_k_tree, k=width),
        events=events,
        palette_size=script.palette_size,
    )


class PartialReducer:
    """
    Streaming partial-to-full reduction for one game.

    The full game starts from ``K_{k+1}`` on ids ``1 .. k+1``: the first vertex
    of the partial game and its next ``k`` arrivals. Later arrivals keep their
    ids and get their attach sets extended to k-cliques.

    :param k: the width
    """

    def __init__(self, k: int):
        if k < 1:
            raise ValueError(f"k must be >= 1, got {k}")
        self.k = k
        base = list(range(1, k + 2))
        self._adj: T.Dict[int, T.Set[int]] = {
            v: set(base) - {v} for v in base
        }

    @property
    def base(self) -> T.List[int]:
        return list(range(1, self.k + 2))

    def augmented_graph(self) -> Graph:
        """
        The full k-tree built so far (the reserved base vertices included).
        """
        return Graph.new(
            self._adj,
            [(a, b) for a, ns in self._adj.items() for b in ns if a < b],
        )

    def neighbors(self, v: int) -> T.Set[int]:
        return self._adj[v]

    def adjacency(self) -> T.Mapping[int, T.Set[int]]:
        """
        Live ``vertex -> neighbors`` view of the augmented graph; callers must
        not mutate it.
        """
        return self._adj

    def extend_clique(self, attach: T.Iterable[int]) -> T.Tuple[int, ...]:
        """
        Grow ``attach`` to a k-clique of the augmented graph, adding the
        smallest eligible id each time.
        """
        clique = sorted(set(attach))
        while len(clique) < self.k:
            if clique:
                common = set.intersection(*(self._adj[u] for u in clique))
            else:
                common = set(self._adj)
            common -= set(clique)
            # never empty: the augmented graph is a k-tree
            clique.append(min(common))
            clique.sort()
        return tuple(clique)

    def push(self, e: GameEvent) -> T.Optional[GameEvent]:
        """
        Feed the next partial event.

        :returns: the full k-tree event, or ``None`` when the vertex belongs to
            the full game's initial clique
        """
        if e.v <= self.k + 1:
            return None
        if e.v in self._adj:
            raise InvalidScript(f"step {e.t}: vertex {e.v} already placed")
        clique = self.extend_clique(e.attach)
        self._adj[e.v] = set(clique)
        for u in clique:
            self._adj[u].add(e.v)
        return GameEvent.new(t=e.v - (self.k + 1), v=e.v, attach=clique)

    def preview(self, e: GameEvent) -> T.Optional[T.Tuple[int, ...]]:
        """
        The k-clique ``e`` would be attached to, without recording it.
        """
        if e.v <= self.k + 1:
            return None
        return self.extend_clique(e.attach)


def reduce_partial_to_full(k: int, script: GameScript) -> GameScript:
    """
    Turn an online partial k-tree script into an online k-tree script with the
    same vertex arrival order and no deletions.

    The graph of the output contains the graph of the input at every step, so
    any coloring valid for the output is valid for the input.

    :raises InvalidScript: if the input breaks the partial k-tree rule
    """
    partial_rule = GraphClassRule(cls=GraphClass.partial_k_tree, k=k)
    if script.rule != partial_rule:
        raise InvalidScript(
            f"expected a {partial_rule.label} script, got {script.rule.label}"
        )
    g = partial_rule.initial_graph()
    reducer = PartialReducer(k)
    out: T.List[GameEvent] = []
    for e in script.events:
        violation = validate_event(partial_rule, g, e)
        if violation is not None:
            raise InvalidScript(violation.reason)
        g = apply_event(g, e)
        full = reducer.push(e)
        if full is not None:
            out.append(full)
    return GameScript(
        rule=GraphClassRule(cls=GraphClass.k_tree, k=k),
        events=tuple(out),
        palette_size=script.palette_size,
    )

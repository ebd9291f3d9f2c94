# -*- coding: utf-8 -*-

"""
The online colorer.

A :class:`Session` follows one game: every event is validated against the
class rule, applied to the game graph, embedded into the universal graph,
and its vertex gets a permanent color:

- **frozen**: the color of the image in a precomputed palette
- **lazy**: the smallest color that closes no repetition through the new
  vertex, neither in the game graph nor in the universal subgraph committed
  so far

The delivered coloring is checked through the new vertex after every step.
"""

import typing as T
import dataclasses
import logging

from ..exc import (
    IllegalEvent,
    PaletteExhausted,
    SelfCheckFailed,
)
from ..utils import dumps_line
from ..graph.model import (
    Graph,
    Coloring,
    GameEvent,
    GameScript,
    GraphClass,
    GraphClassRule,
    apply_event,
)
from ..graph.rules import validate_event
from ..repetition.search import (
    SearchGraph,
    forbidden_colors_through,
    find_repetition_through,
)
from ..universal.horizon import Target
from ..universal.tracker import UniversalTracker, default_target
from ..palette.frozen import FrozenPalette, color_of

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class FrozenOracle:
    """
    Look colors up in a precomputed palette.
    """

    palette: FrozenPalette = dataclasses.field()

    @property
    def palette_size(self) -> int:
        return self.palette.palette_size

    @property
    def label(self) -> str:
        return f"frozen:{self.palette.target.label}:d{self.palette.horizon}"

    def target_for(self, rule: GraphClassRule) -> Target:
        return self.palette.target


@dataclasses.dataclass(frozen=True)
class LazyOracle:
    """
    Pick colors on demand from ``1 .. palette_size``.

    :param target: universal graph to embed into; defaults to ``O`` for
        path classes and the smallest hosting ``U(k)`` otherwise
    """

    palette_size: int = dataclasses.field()
    target: T.Optional[Target] = dataclasses.field(default=None)

    def __post_init__(self):
        if self.palette_size < 1:
            raise ValueError(f"palette_size must be >= 1, got {self.palette_size}")

    @property
    def label(self) -> str:
        if self.target is None:
            return f"lazy:{self.palette_size}"
        return f"lazy:{self.palette_size}:{self.target.label}"

    def target_for(self, rule: GraphClassRule) -> Target:
        if self.target is None:
            return default_target(rule)
        return self.target


Oracle = T.Union[FrozenOracle, LazyOracle]


@dataclasses.dataclass(frozen=True)
class SessionConfig:
    """
    :param self_check: re-check every delivered step
    :param max_half: half length bound for the classes whose graphs have
        exponentially many paths (series-parallel, partial k-trees, k-trees)
        and for the lazy universal check
    :param lazy_universal_check: in lazy mode also avoid repetitions in the
        committed universal subgraph
    """

    self_check: bool = dataclasses.field(default=True)
    max_half: int = dataclasses.field(default=8)
    lazy_universal_check: bool = dataclasses.field(default=True)

    def __post_init__(self):
        if self.max_half < 1:
            raise ValueError(f"max_half must be >= 1, got {self.max_half}")


_EXHAUSTIVE_CLASSES = (
    GraphClass.left_to_right_path,
    GraphClass.path,
    GraphClass.tree,
    GraphClass.cycle,
)


@dataclasses.dataclass
class Trace:
    """
    Header plus one ``{"t","v","color"}`` record per colored vertex; the
    initial graph is recorded at ``t = 0``.
    """

    header: T.Dict[str, T.Any] = dataclasses.field()
    records: T.List[T.Dict[str, int]] = dataclasses.field(default_factory=list)

    def colors(self) -> T.List[int]:
        return [r["color"] for r in self.records]

    def dumps(self) -> str:
        lines = [dumps_line(self.header)]
        lines.extend(dumps_line(r) for r in self.records)
        return "\n".join(lines) + "\n"


class Session:
    """
    One online game. Single owner, strictly sequential.

    Use :meth:`start` to create one. Once a step raised
    :class:`PaletteExhausted` or :class:`SelfCheckFailed` the session is
    closed; :class:`HorizonExceeded` and :class:`IllegalEvent` leave it
    untouched.
    """

    def __init__(
        self,
        rule: GraphClassRule,
        oracle: Oracle,
        config: SessionConfig,
        tracker: UniversalTracker,
    ):
        self.rule = rule
        self.oracle = oracle
        self.config = config
        self.tracker = tracker
        self.graph: Graph = rule.initial_graph()
        self.colors: T.Dict[int, int] = {}
        self.t = 0
        self.closed = False
        self.trace = Trace(
            header={
                "class": rule.cls.value,
                "k": rule.k,
                "oracle": oracle.label,
                "palette": oracle.palette_size,
            }
        )

    @classmethod
    def start(
        cls,
        rule: GraphClassRule,
        oracle: Oracle,
        config: T.Optional[SessionConfig] = None,
    ) -> "Session":
        """
        Build ``G_0`` and color it from the oracle.

        :raises IncompatibleOracle: when games of ``rule`` cannot embed into
            the oracle's universal graph
        """
        if config is None:
            config = SessionConfig()
        tracker = UniversalTracker(rule, oracle.target_for(rule))
        session = cls(rule, oracle, config, tracker)
        for v in session.graph.sorted_vertices():
            color = session._choose(v, session.tracker.image(v), session.graph)
            session._deliver(v, color, session.graph)
        logger.debug(
            "session %s with %s started, G_0 colors %s",
            rule.label,
            oracle.label,
            [session.colors[v] for v in session.graph.sorted_vertices()],
        )
        return session

    @property
    def palette_size(self) -> int:
        return self.oracle.palette_size

    @property
    def coloring(self) -> Coloring:
        return Coloring.new(self.colors, self.palette_size)

    @property
    def game_max_half(self) -> T.Optional[int]:
        """
        ``None`` (exhaustive) for paths, trees and cycles.
        """
        if self.rule.cls in _EXHAUSTIVE_CLASSES:
            return None
        return self.config.max_half

    def _game_search_graph(self, g: Graph) -> SearchGraph:
        return SearchGraph.undirected(g)

    def _choose(self, v: int, image, g: Graph) -> int:
        if isinstance(self.oracle, FrozenOracle):
            return color_of(self.oracle.palette, image)
        p = self.palette_size
        forbidden = forbidden_colors_through(
            self._game_search_graph(g), self.colors, v, self.game_max_half, p
        )
        if self.config.lazy_universal_check and len(forbidden) < p:
            forbidden |= forbidden_colors_through(
                self.tracker.committed_search_graph(),
                self.colors,
                v,
                self.config.max_half,
                p,
            )
        for color in range(1, p + 1):
            if color not in forbidden:
                return color
        self.closed = True
        logger.warning(
            "%s: palette of %d exhausted at step %d (vertex %d)",
            self.rule.label,
            p,
            self.t,
            v,
        )
        raise PaletteExhausted(self.t, v, p)

    def _deliver(self, v: int, color: int, g: Graph):
        self.colors[v] = color
        if self.config.self_check:
            w = find_repetition_through(
                self._game_search_graph(g), self.colors, v, self.game_max_half
            )
            if w is not None:
                self.closed = True
                raise SelfCheckFailed(w)
        self.trace.records.append({"t": self.t, "v": v, "color": color})

    def step(self, e: GameEvent) -> int:
        """
        Color the vertex of ``e``.

        :raises IllegalEvent: when ``e`` breaks the class rule
        :raises HorizonExceeded: frozen mode, the image is beyond the horizon
        :raises PaletteExhausted: lazy mode, every color closes a repetition
        :raises SelfCheckFailed: the delivered coloring has a repetition
        """
        if self.closed:
            raise RuntimeError("session is closed")
        violation = validate_event(self.rule, self.graph, e)
        if violation is not None:
            raise IllegalEvent(violation)
        g_next = apply_event(self.graph, e)
        if isinstance(self.oracle, FrozenOracle):
            color = color_of(self.oracle.palette, self.tracker.preview_image(e))
            self.tracker.push(e)
            self.t = e.t
        else:
            image = self.tracker.push(e)
            self.t = e.t
            color = self._choose(e.v, image, g_next)
        self.graph = g_next
        self._deliver(e.v, color, g_next)
        return color


def replay(
    script: GameScript,
    oracle: Oracle,
    config: T.Optional[SessionConfig] = None,
) -> Trace:
    """
    Start a session for ``script.rule`` and feed it every event.

    Errors of :meth:`Session.step` propagate.
    """
    session = Session.start(script.rule, oracle, config)
    for e in script.events:
        session.step(e)
    return session.trace

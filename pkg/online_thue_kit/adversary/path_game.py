# -*- coding: utf-8 -*-

"""
Exact solver for the online nonrepetitive path game.

The adversary grows a path one vertex at a time: a new end on the left or
the right, or a vertex subdividing one of the edges. The painter then
colors the new vertex with one of ``palette_size`` colors so that the color
string of the path stays free of repetitions. The adversary wins when the
painter has no such color.

The painter is quantified over every legal reply, so an adversary win
defeats every online painter with that many colors. Positions are color
strings up to renaming the colors (by first occurrence) and, unless only
right appends are allowed, up to reversal.
"""

import typing as T
import enum
import dataclasses
import logging

from ..exc import BudgetExceeded, PaletteExhausted
from ..sequences import square_through
from ..utils import dumps_line
from ..graph.model import GameEvent, GraphClassRule
from ..universal.horizon import Target

logger = logging.getLogger(__name__)

#: transposition table entries before the solver gives up
DEFAULT_NODE_CAP = 2_000_000
#: log solver progress every this many evaluated positions
PROGRESS_EVERY = 100_000

Colors = T.Tuple[int, ...]


def rename_colors(seq: T.Sequence[int]) -> Colors:
    """
    Rename colors to ``1, 2, ...`` in order of first occurrence.
    """
    names: T.Dict[int, int] = {}
    out = []
    for c in seq:
        if c not in names:
            names[c] = len(names) + 1
        out.append(names[c])
    return tuple(out)


def canonical_colors(seq: T.Sequence[int], reversible: bool = True) -> Colors:
    forward = rename_colors(seq)
    if not reversible:
        return forward
    return min(forward, rename_colors(reversed(seq)))


@dataclasses.dataclass(frozen=True)
class GamePosition:
    """
    The color string of the current path.

    :param colors: colors in path order; must be free of repetitions
    :param palette_size: number of colors the painter owns
    :param reversible: whether reversal is a symmetry (both ends grow)
    """

    colors: Colors = dataclasses.field()
    palette_size: int = dataclasses.field()
    reversible: bool = dataclasses.field(default=True)

    def __post_init__(self):
        if self.palette_size < 1:
            raise ValueError(f"palette_size must be >= 1, got {self.palette_size}")

    @classmethod
    def new(
        cls,
        colors: T.Iterable[int],
        palette_size: int,
        reversible: bool = True,
    ) -> "GamePosition":
        return cls(
            colors=tuple(colors),
            palette_size=palette_size,
            reversible=reversible,
        )

    @property
    def canonical(self) -> "GamePosition":
        return dataclasses.replace(
            self, colors=canonical_colors(self.colors, self.reversible)
        )

    def __len__(self) -> int:
        return len(self.colors)


class MoveKind(str, enum.Enum):
    left = "left"
    right = "right"
    subdivide = "subdivide"


@dataclasses.dataclass(frozen=True)
class PathMove:
    """
    An adversary move on a path of ``n`` vertices.

    :param kind: where the new vertex goes
    :param slot: for ``subdivide``, the new vertex lands between positions
        ``slot - 1`` and ``slot``, ``1 <= slot <= n - 1``
    """

    kind: MoveKind = dataclasses.field()
    slot: int = dataclasses.field(default=0)

    def insert_at(self, n: int) -> int:
        """
        Index of the new vertex in the grown color string.
        """
        if self.kind == MoveKind.left:
            return 0
        if self.kind == MoveKind.right:
            return n
        return self.slot

    def to_record(self) -> T.Dict[str, T.Any]:
        if self.kind == MoveKind.subdivide:
            return {"kind": self.kind.value, "slot": self.slot}
        return {"kind": self.kind.value}

    @classmethod
    def from_record(cls, record: T.Mapping[str, T.Any]) -> "PathMove":
        return cls(kind=MoveKind(record["kind"]), slot=int(record.get("slot", 0)))


def adversary_moves(n: int, left_to_right: bool = False) -> T.List[PathMove]:
    """
    Every move on a path of ``n`` vertices, right append first.
    """
    moves = [PathMove(kind=MoveKind.right)]
    if left_to_right:
        return moves
    moves.extend(PathMove(kind=MoveKind.subdivide, slot=i) for i in range(1, n))
    if n > 1:
        moves.append(PathMove(kind=MoveKind.left))
    return moves


def painter_replies(
    seq: Colors,
    pos: int,
    palette_size: int,
) -> T.List[Colors]:
    """
    Every grown color string the painter may produce by coloring a new
    vertex at index ``pos``. Colors not used yet are interchangeable, so only
    the smallest one is tried; it can never close a repetition.
    """
    used = max(seq, default=0)
    out = []
    for c in range(1, used + 1):
        child = seq[:pos] + (c,) + seq[pos:]
        if square_through(child, pos) is None:
            out.append(child)
    if used < palette_size:
        out.append(seq[:pos] + (used + 1,) + seq[pos:])
    return out


@dataclasses.dataclass(frozen=True)
class AdversaryWins:
    """
    :param depth: number of path vertices, the uncolorable one included,
        when the painter is stuck under best play
    :param strategy: a winning strategy from the single-vertex start
    """

    depth: int = dataclasses.field()
    strategy: T.Any = dataclasses.field(default=None, repr=False)
    nodes: int = dataclasses.field(default=0)

    @property
    def label(self) -> str:
        return "adversary_wins"


@dataclasses.dataclass(frozen=True)
class PainterSurvives:
    """
    The painter survives every play that places up to ``depth`` vertices.
    """

    depth: int = dataclasses.field()
    nodes: int = dataclasses.field(default=0)

    @property
    def label(self) -> str:
        return "painter_survives"


@dataclasses.dataclass(frozen=True)
class Inconclusive:
    """
    The painter survives to ``depth``; the next depth hit the node cap.
    """

    depth: int = dataclasses.field()
    nodes: int = dataclasses.field(default=0)

    @property
    def label(self) -> str:
        return "inconclusive"


Outcome = T.Union[AdversaryWins, PainterSurvives, Inconclusive]


def outcome_to_record(outcome: Outcome) -> T.Dict[str, T.Any]:
    return {"outcome": outcome.label, "depth": outcome.depth, "nodes": outcome.nodes}


class PathGameSolver:
    """
    Memoized minimax over canonical positions.

    The table maps ``(canonical colors, vertices still to place)`` to whether
    the adversary forces a win. Entries never change once written, so the
    table can be shared between depths.
    """

    def __init__(
        self,
        palette_size: int,
        left_to_right: bool = False,
        node_cap: int = DEFAULT_NODE_CAP,
    ):
        if palette_size < 1:
            raise ValueError(f"palette_size must be >= 1, got {palette_size}")
        self.palette_size = palette_size
        self.left_to_right = left_to_right
        self.node_cap = node_cap
        self.table: T.Dict[T.Tuple[Colors, int], bool] = {}
        self.nodes = 0

    def canonical(self, seq: T.Sequence[int]) -> Colors:
        return canonical_colors(seq, reversible=not self.left_to_right)

    def replies(self, seq: Colors, move: PathMove) -> T.List[Colors]:
        return painter_replies(seq, move.insert_at(len(seq)), self.palette_size)

    def adversary_wins(self, seq: T.Sequence[int], remaining: int) -> bool:
        """
        Whether the adversary, allowed ``remaining`` more vertices, forces
        the painter to get stuck from the string ``seq``.

        :raises BudgetExceeded: when the table outgrows ``node_cap``
        """
        if remaining <= 0:
            return False
        key = (self.canonical(seq), remaining)
        hit = self.table.get(key)
        if hit is not None:
            return hit
        if len(self.table) >= self.node_cap:
            raise BudgetExceeded(
                f"path game table reached {self.node_cap} positions"
            )
        self.nodes += 1
        if self.nodes % PROGRESS_EVERY == 0:
            logger.debug(
                "path game p=%d: %d positions, table %d",
                self.palette_size,
                self.nodes,
                len(self.table),
            )
        seq = key[0]
        moves = adversary_moves(len(seq), self.left_to_right)
        per_move = [self.replies(seq, m) for m in moves]
        if any(not children for children in per_move):
            result = True
        else:
            result = any(
                all(self.adversary_wins(child, remaining - 1) for child in children)
                for children in per_move
            )
        self.table[key] = result
        return result

    def winning_move(self, seq: T.Sequence[int], remaining: int) -> T.Optional[PathMove]:
        """
        A move on the raw string ``seq`` that keeps the adversary winning,
        stuck painter first.
        """
        seq = tuple(seq)
        moves = adversary_moves(len(seq), self.left_to_right)
        per_move = [(m, self.replies(seq, m)) for m in moves]
        for m, children in per_move:
            if not children:
                return m
        for m, children in per_move:
            if all(self.adversary_wins(child, remaining - 1) for child in children):
                return m
        return None


class AdversaryStrategy:
    """
    A winning adversary strategy backed by the solver's table.

    :param solver: the solver that found the win
    :param depth: the depth it was found at
    """

    def __init__(self, solver: PathGameSolver, depth: int):
        self.solver = solver
        self.depth = depth

    @property
    def palette_size(self) -> int:
        return self.solver.palette_size

    @property
    def left_to_right(self) -> bool:
        return self.solver.left_to_right

    def choose(self, seq: T.Sequence[int]) -> PathMove:
        """
        The next move on the current color string.

        :raises ValueError: when ``seq`` is not a position the strategy wins
            from (a repetition, or a string this strategy never allows)
        """
        move = self.solver.winning_move(seq, self.depth - len(seq))
        if move is None:
            raise ValueError(f"no winning move from {tuple(seq)}")
        return move

    def iter_records(self) -> T.Iterator[T.Dict[str, T.Any]]:
        """
        One ``{"colors","move"}`` record per canonical position reachable
        under the strategy, depth first.
        """
        seen = set()
        stack: T.List[Colors] = [(1,)]
        while stack:
            seq = self.solver.canonical(stack.pop())
            if seq in seen:
                continue
            seen.add(seq)
            move = self.choose(seq)
            yield {"colors": list(seq), "move": move.to_record()}
            stack.extend(reversed(self.solver.replies(seq, move)))

    def dumps(self) -> str:
        header = {
            "format": "online-thue-path-strategy",
            "palette_size": self.palette_size,
            "left_to_right": self.left_to_right,
            "depth": self.depth,
        }
        lines = [dumps_line(header)]
        lines.extend(dumps_line(r) for r in self.iter_records())
        return "\n".join(lines) + "\n"


def solve_path_game(
    palette_size: int,
    max_plies: int,
    left_to_right: bool = False,
    node_cap: int = DEFAULT_NODE_CAP,
) -> Outcome:
    """
    Solve the path game by iterative deepening on the number of path
    vertices, starting from one colored vertex.

    :param palette_size: painter's colors
    :param max_plies: largest depth (path vertices) to try
    :param left_to_right: the adversary may only append on the right
    :param node_cap: transposition table cap; reaching it yields
        :class:`Inconclusive`
    """
    if max_plies < 1:
        raise ValueError(f"max_plies must be >= 1, got {max_plies}")
    solver = PathGameSolver(palette_size, left_to_right, node_cap)
    for depth in range(2, max_plies + 1):
        try:
            won = solver.adversary_wins((1,), depth - 1)
        except BudgetExceeded as e:
            logger.info("path game p=%d: %s at depth %d", palette_size, e, depth)
            return Inconclusive(depth=depth - 1, nodes=solver.nodes)
        logger.debug(
            "path game p=%d depth %d: %s, %d positions",
            palette_size,
            depth,
            "won" if won else "survived",
            solver.nodes,
        )
        if won:
            return AdversaryWins(
                depth=depth,
                strategy=AdversaryStrategy(solver, depth),
                nodes=solver.nodes,
            )
    return PainterSurvives(depth=max_plies, nodes=solver.nodes)


def play_against_engine(
    strategy: AdversaryStrategy,
    palette_size: T.Optional[int] = None,
    config=None,
) -> T.Optional[int]:
    """
    Drive a lazy path session with ``strategy``.

    :param palette_size: the engine's palette, the strategy's by default
    :return: the number of path vertices when the engine raised
        :class:`PaletteExhausted`, or ``None`` when the strategy's depth was
        reached without it
    """
    from ..engine.session import LazyOracle, Session

    if palette_size is None:
        palette_size = strategy.palette_size
    name = "left_to_right_path" if strategy.left_to_right else "path"
    session = Session.start(
        GraphClassRule.new(name), LazyOracle(palette_size, Target.o()), config
    )
    order = [1]
    for t in range(1, strategy.depth):
        seq = tuple(session.colors[v] for v in order)
        move = strategy.choose(seq)
        v = t + 1
        if move.kind == MoveKind.left:
            e = GameEvent.new(t=t, v=v, attach=[order[0]])
        elif move.kind == MoveKind.right:
            e = GameEvent.new(t=t, v=v, attach=[order[-1]])
        else:
            a, b = order[move.slot - 1], order[move.slot]
            e = GameEvent.new(t=t, v=v, attach=[a, b], delete=[(a, b)])
        try:
            session.step(e)
        except PaletteExhausted:
            logger.info("engine with %d colors exhausted at depth %d", palette_size, len(order) + 1)
            return len(order) + 1
        order.insert(move.insert_at(len(order)), v)
    return None

# -*- coding: utf-8 -*-

"""
Exact solver for the online list game on a left-to-right path.

Before each new vertex is appended the adversary names a list of
``list_size`` colors; the painter must color the vertex from that list and
keep the color string free of repetitions.

Color names only matter through their equality pattern, so a position is
the color string renamed by first occurrence, and a list is the set of
already seen colors it contains plus a count of colors never seen. Fresh
colors are interchangeable and never close a repetition.

A list may as well contain every seen color that would close a repetition
(the forbidden set): swapping one in for another member only removes painter
options. The solver therefore enumerates only lists that contain the whole
forbidden set.
"""

import typing as T
import itertools
import dataclasses
import logging

from ..exc import BudgetExceeded
from ..sequences import suffix_square
from ..adversary.path_game import (
    AdversaryWins,
    Inconclusive,
    Outcome,
    PainterSurvives,
    rename_colors,
)

logger = logging.getLogger(__name__)

DEFAULT_NODE_CAP = 2_000_000
PROGRESS_EVERY = 100_000

Colors = T.Tuple[int, ...]


@dataclasses.dataclass(frozen=True)
class ListAssignment:
    """
    The list offered for one step.
    """

    colors: T.FrozenSet[int] = dataclasses.field()
    size: int = dataclasses.field()

    def __post_init__(self):
        if len(self.colors) != self.size:
            raise ValueError(f"list {sorted(self.colors)} does not have {self.size} colors")

    @classmethod
    def new(cls, colors: T.Iterable[int]) -> "ListAssignment":
        colors = frozenset(colors)
        return cls(colors=colors, size=len(colors))


@dataclasses.dataclass(frozen=True)
class CanonicalList:
    """
    :param seen: renamed seen colors on the list
    :param fresh: number of never seen colors on the list
    """

    seen: T.FrozenSet[int] = dataclasses.field()
    fresh: int = dataclasses.field()

    @property
    def size(self) -> int:
        return len(self.seen) + self.fresh


def canonical_list(seq: T.Sequence[int], colors: T.Iterable[int]) -> CanonicalList:
    names: T.Dict[int, int] = {}
    for c in seq:
        if c not in names:
            names[c] = len(names) + 1
    seen = frozenset(names[c] for c in colors if c in names)
    fresh = sum(1 for c in set(colors) if c not in names)
    return CanonicalList(seen=seen, fresh=fresh)


@dataclasses.dataclass(frozen=True)
class ListPosition:
    """
    The colors placed so far and, between moves, the pending list.
    """

    colors: Colors = dataclasses.field()
    list_size: int = dataclasses.field()
    pending: T.Optional[T.FrozenSet[int]] = dataclasses.field(default=None)

    @property
    def canonical(self) -> T.Tuple[Colors, T.Optional[CanonicalList]]:
        lst = None
        if self.pending is not None:
            lst = canonical_list(self.colors, self.pending)
        return rename_colors(self.colors), lst


def forbidden_colors(seq: Colors) -> T.FrozenSet[int]:
    """
    Seen colors that close a repetition when appended to ``seq``.
    """
    return frozenset(
        c for c in range(1, max(seq, default=0) + 1) if suffix_square(seq + (c,)) is not None
    )


class ListGameSolver:
    """
    Memoized minimax over ``(renamed colors, vertices still to place)``.
    """

    def __init__(self, list_size: int, node_cap: int = DEFAULT_NODE_CAP):
        if list_size < 1:
            raise ValueError(f"list_size must be >= 1, got {list_size}")
        self.list_size = list_size
        self.node_cap = node_cap
        self.table: T.Dict[T.Tuple[Colors, int], bool] = {}
        self.nodes = 0

    def adversary_lists(self, seq: Colors) -> T.List[CanonicalList]:
        """
        Lists containing the whole forbidden set, fewest painter options
        first. Empty when the forbidden set alone fills a list.
        """
        s = self.list_size
        forbidden = forbidden_colors(seq)
        if len(forbidden) >= s:
            return []
        free = [c for c in range(1, max(seq, default=0) + 1) if c not in forbidden]
        room = s - len(forbidden)
        out = []
        for a in range(min(room, len(free)), -1, -1):
            for chosen in itertools.combinations(free, a):
                out.append(CanonicalList(seen=forbidden | frozenset(chosen), fresh=room - a))
        return out

    def replies(self, seq: Colors, lst: CanonicalList) -> T.List[Colors]:
        """
        Painter replies to ``lst``, fresh color first.
        """
        out = []
        if lst.fresh:
            out.append(seq + (max(seq, default=0) + 1,))
        for c in sorted(lst.seen):
            child = seq + (c,)
            if suffix_square(child) is None:
                out.append(child)
        return out

    def adversary_wins(self, seq: T.Sequence[int], remaining: int) -> bool:
        """
        :raises BudgetExceeded: when the table outgrows ``node_cap``
        """
        if remaining <= 0:
            return False
        seq = rename_colors(seq)
        key = (seq, remaining)
        hit = self.table.get(key)
        if hit is not None:
            return hit
        if len(self.table) >= self.node_cap:
            raise BudgetExceeded(f"list game table reached {self.node_cap} positions")
        self.nodes += 1
        if self.nodes % PROGRESS_EVERY == 0:
            logger.debug(
                "list game s=%d: %d positions, table %d",
                self.list_size,
                self.nodes,
                len(self.table),
            )
        lists = self.adversary_lists(seq)
        if not lists:
            result = True
        else:
            result = any(
                all(self.adversary_wins(child, remaining - 1) for child in self.replies(seq, lst))
                for lst in lists
            )
        self.table[key] = result
        return result

    def painter_survives(self, seq: T.Sequence[int], remaining: int) -> bool:
        return not self.adversary_wins(seq, remaining)

    def winning_list(self, seq: T.Sequence[int], remaining: int) -> T.Optional[CanonicalList]:
        seq = rename_colors(seq)
        lists = self.adversary_lists(seq)
        if not lists:
            forbidden = sorted(forbidden_colors(seq))
            return CanonicalList(seen=frozenset(forbidden[: self.list_size]), fresh=0)
        for lst in lists:
            if all(self.adversary_wins(child, remaining - 1) for child in self.replies(seq, lst)):
                return lst
        return None


class ListAdversary:
    """
    Solver-extracted adversary: offers lists that keep its win.

    :param solver: the solver that found the win
    :param depth: the number of vertices by which the painter gets stuck
    """

    def __init__(self, solver: ListGameSolver, depth: int):
        self.solver = solver
        self.depth = depth

    @property
    def list_size(self) -> int:
        return self.solver.list_size

    def choose(self, seq: T.Sequence[int]) -> ListAssignment:
        """
        The next list, in the painter's own color names. Fresh members are
        the smallest integers not used so far.

        :raises ValueError: when ``seq`` is not a position the adversary wins
            from
        """
        seq = tuple(seq)
        lst = self.solver.winning_list(seq, self.depth - len(seq))
        if lst is None:
            raise ValueError(f"no winning list after {seq}")
        raw_of: T.Dict[int, int] = {}
        for c in seq:
            if c not in raw_of.values():
                raw_of[len(raw_of) + 1] = c
        colors = {raw_of[c] for c in lst.seen}
        used = set(seq)
        candidate = 1
        while len(colors) < lst.size:
            if candidate not in used:
                colors.add(candidate)
            candidate += 1
        return ListAssignment.new(colors)


def solve_list_game(
    list_size: int,
    max_plies: int,
    node_cap: int = DEFAULT_NODE_CAP,
) -> Outcome:
    """
    Iterative deepening on the number of path vertices, from the empty path.

    :return: :class:`AdversaryWins` carrying a :class:`ListAdversary`,
        :class:`PainterSurvives` or :class:`Inconclusive`
    """
    if max_plies < 1:
        raise ValueError(f"max_plies must be >= 1, got {max_plies}")
    solver = ListGameSolver(list_size, node_cap)
    for depth in range(1, max_plies + 1):
        try:
            won = solver.adversary_wins((), depth)
        except BudgetExceeded as e:
            logger.info("list game s=%d: %s at depth %d", list_size, e, depth)
            return Inconclusive(depth=depth - 1, nodes=solver.nodes)
        logger.debug(
            "list game s=%d depth %d: %s, %d positions",
            list_size,
            depth,
            "won" if won else "survived",
            solver.nodes,
        )
        if won:
            return AdversaryWins(
                depth=depth,
                strategy=ListAdversary(solver, depth),
                nodes=solver.nodes,
            )
    return PainterSurvives(depth=max_plies, nodes=solver.nodes)

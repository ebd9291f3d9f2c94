# -*- coding: utf-8 -*-

"""
Play the list game between a painter strategy and a list source.
"""

import typing as T
import random
import dataclasses
import logging

from ..sequences import suffix_square
from ..utils import dumps_line
from ..repetition.checkers import check_path
from ..repetition.witness import RepetitionWitness
from .solver import ListAdversary, ListAssignment, ListGameSolver

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class PainterStrategy:
    """
    ``greedy`` takes the smallest legal color; ``lookahead`` with ``depth``
    prefers a color from which the painter survives ``depth`` more
    vertices against every list.
    """

    name: str = dataclasses.field()
    depth: int = dataclasses.field(default=0)

    def __post_init__(self):
        if self.name not in ("greedy", "lookahead"):
            raise ValueError(f"unknown painter strategy {self.name!r}")
        if self.name == "lookahead" and self.depth < 1:
            raise ValueError(f"lookahead needs depth >= 1, got {self.depth}")

    @classmethod
    def parse(cls, text: str) -> "PainterStrategy":
        """
        ``greedy`` or ``lookahead:D``.
        """
        name, _, depth = text.strip().partition(":")
        if name == "lookahead":
            try:
                return cls(name=name, depth=int(depth))
            except ValueError:
                raise ValueError(f"bad painter strategy {text!r}")
        if depth:
            raise ValueError(f"bad painter strategy {text!r}")
        return cls(name=name)

    @property
    def label(self) -> str:
        if self.name == "lookahead":
            return f"lookahead:{self.depth}"
        return self.name


class RandomListSource:
    """
    Uniform random lists of ``list_size`` colors out of ``1 .. universe``.
    """

    def __init__(self, list_size: int, universe: int, seed: int):
        if not 1 <= list_size <= universe:
            raise ValueError(f"need 1 <= list_size <= universe, got {list_size}, {universe}")
        self.list_size = list_size
        self.universe = universe
        self.seed = seed
        self.rng = random.Random(seed)

    def choose(self, seq: T.Sequence[int]) -> ListAssignment:
        return ListAssignment.new(self.rng.sample(range(1, self.universe + 1), self.list_size))


ListSource = T.Union[RandomListSource, ListAdversary]


@dataclasses.dataclass
class ListTrace:
    """
    :param lists: the list offered at every step
    :param colors: the colors chosen; one shorter than ``lists`` when the
        painter got stuck
    :param witness: when stuck, the repetition closed by the smallest list
        member, as 0-based positions
    """

    strategy: str = dataclasses.field()
    lists: T.List[T.List[int]] = dataclasses.field(default_factory=list)
    colors: T.List[int] = dataclasses.field(default_factory=list)
    witness: T.Optional[RepetitionWitness] = dataclasses.field(default=None)

    @property
    def survived(self) -> bool:
        return self.witness is None

    def dumps(self) -> str:
        lines = [dumps_line({"strategy": self.strategy, "survived": self.survived})]
        for t, lst in enumerate(self.lists, start=1):
            record = {"t": t, "list": lst}
            if t <= len(self.colors):
                record["color"] = self.colors[t - 1]
            lines.append(dumps_line(record))
        if self.witness is not None:
            lines.append(dumps_line({"witness": self.witness.to_record()}))
        return "\n".join(lines) + "\n"


def _legal(seq: T.Tuple[int, ...], lst: ListAssignment) -> T.List[int]:
    return [c for c in sorted(lst.colors) if suffix_square(seq + (c,)) is None]


def play_list_game(
    strategy: PainterStrategy,
    source: ListSource,
    n: int,
    solver: T.Optional[ListGameSolver] = None,
) -> ListTrace:
    """
    Play up to ``n`` steps; the trace stops early at the step where no list
    member is legal.

    :param solver: table for ``lookahead``; a fresh one sized to the
        source's lists by default
    """
    if strategy.name == "lookahead" and solver is None:
        solver = ListGameSolver(source.list_size)
    trace = ListTrace(strategy=strategy.label)
    seq: T.Tuple[int, ...] = ()
    for _ in range(n):
        lst = source.choose(seq)
        trace.lists.append(sorted(lst.colors))
        legal = _legal(seq, lst)
        if not legal:
            c = min(lst.colors)
            trace.witness = check_path(list(seq + (c,)))
            logger.debug("painter stuck at step %d with list %s", len(seq) + 1, sorted(lst.colors))
            break
        choice = legal[0]
        if strategy.name == "lookahead":
            for c in legal:
                if solver.painter_survives(seq + (c,), strategy.depth):
                    choice = c
                    break
        seq = seq + (choice,)
        trace.colors.append(choice)
    return trace

# -*- coding: utf-8 -*-

"""
Exceptions raised by ``online_thue_kit``.

All domain errors derive from :class:`OnlineThueError` so the command line
surface can tell a refuted run (exit 1) apart from misuse (exit 2).
"""

import typing as T

if T.TYPE_CHECKING:  # pragma: no cover
    from .graph.rules import Violation


class OnlineThueError(Exception):
    """
    Base class of every domain error in this package.
    """


class InvalidEvent(OnlineThueError):
    """
    Raised when a game event refers to ids that do not exist in the graph it
    is applied to, or when the new vertex id is not fresh.

    :param message: which id or edge was stale
    """


class InvalidScript(OnlineThueError):
    """
    Raised when a whole script breaks the rule it is declared under, for
    example when it is fed to the partial-to-full reduction.
    """


class IllegalEvent(OnlineThueError):
    """
    Raised by an online session when an event does not match any move shape
    its graph class allows.

    :param violation: the :class:`~online_thue_kit.graph.rules.Violation`
        value returned by ``validate_event``.
    """

    def __init__(self, violation: "Violation"):
        super().__init__(violation.reason)
        self.violation = violation


class SizeGuard(OnlineThueError):
    """
    Raised when an exhaustive (exponential) computation is requested on an
    instance larger than the configured vertex budget.
    """


class NotATree(OnlineThueError):
    """
    Raised by the tree checker when its input is not a tree.
    """


class Unsatisfiable(OnlineThueError):
    """
    Raised when an exhaustive backtracking search finds no coloring with the
    requested palette size.
    """


class HorizonExceeded(OnlineThueError):
    """
    Raised when a frozen palette is asked for the color of a universal vertex
    born after the palette's horizon stage.

    :param stage: stage of the requested vertex
    :param horizon: horizon of the palette
    """

    def __init__(self, stage: int, horizon: int):
        super().__init__(f"vertex at stage {stage} is beyond horizon {horizon}")
        self.stage = stage
        self.horizon = horizon


class PaletteExhausted(OnlineThueError):
    """
    Raised in lazy mode when every color of the palette closes a repetition.

    :param t: the step index at which no safe color existed
    :param vertex: the game vertex that could not be colored
    """

    def __init__(self, t: int, vertex: int, palette_size: int):
        super().__init__(
            f"step {t}: no safe color for vertex {vertex} among {palette_size} colors"
        )
        self.t = t
        self.vertex = vertex
        self.palette_size = palette_size


class IncompatibleOracle(OnlineThueError):
    """
    Raised when a session is started with an oracle whose universal graph
    cannot host the requested graph class.
    """


class BudgetExceeded(OnlineThueError):
    """
    Raised inside the game solvers when the transposition table grows beyond
    its cap. Callers turn it into an ``Inconclusive`` outcome.
    """


class SelfCheckFailed(OnlineThueError):
    """
    Raised when the coloring delivered by a session contains a repetition.
    This can only happen with a corrupt frozen palette.

    :param witness: the offending :class:`~online_thue_kit.repetition.witness.RepetitionWitness`
    """

    def __init__(self, witness):
        super().__init__(f"delivered coloring has a repetition: {witness}")
        self.witness = witness


class PaletteFormatError(OnlineThueError):
    """
    Raised when a palette file has an unknown version, an inconsistent header,
    or fails re-verification on load.
    """


class StoreTestError(Exception):
    """
    Custom exception raised during testing to simulate failures.

    This exception is used exclusively for testing error handling and cleanup
    behavior of the results store. It allows tests to inject failures at
    specific points of the staging workflow to verify rollback and cleanup.

    :param message: Descriptive error message indicating where the failure occurred
    """

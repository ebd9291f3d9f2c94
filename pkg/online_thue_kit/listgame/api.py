# -*- coding: utf-8 -*-

from .solver import ListAssignment
from .solver import CanonicalList
from .solver import canonical_list
from .solver import ListPosition
from .solver import forbidden_colors
from .solver import ListGameSolver
from .solver import ListAdversary
from .solver import solve_list_game
from .play import PainterStrategy
from .play import RandomListSource
from .play import ListTrace
from .play import play_list_game

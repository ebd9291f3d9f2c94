# -*- coding: utf-8 -*-

from .games import random_game
from .path_game import rename_colors
from .path_game import canonical_colors
from .path_game import GamePosition
from .path_game import MoveKind
from .path_game import PathMove
from .path_game import adversary_moves
from .path_game import painter_replies
from .path_game import AdversaryWins
from .path_game import PainterSurvives
from .path_game import Inconclusive
from .path_game import outcome_to_record
from .path_game import PathGameSolver
from .path_game import AdversaryStrategy
from .path_game import solve_path_game
from .path_game import play_against_engine

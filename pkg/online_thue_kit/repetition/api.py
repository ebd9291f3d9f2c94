# -*- coding: utf-8 -*-

from .witness import RepetitionWitness
from .witness import revalidate
from .structures import Digraph
from .structures import RootedTree
from .structures import orient_by_heights
from .search import SearchGraph
from .search import forbidden_colors_through
from .search import find_repetition_through
from .search import has_repetition
from .checkers import DEFAULT_GRAPH_VERTEX_BUDGET
from .checkers import check_path
from .checkers import check_graph
from .checkers import check_directed
from .checkers import check_tree
from .checkers import check_vertical
from .checkers import canonical_witness
from .colorer import CheckMode
from .colorer import MIN_COLORS_VERTEX_BUDGET
from .colorer import search_graph_for
from .colorer import Backtracker
from .colorer import connected_order
from .colorer import min_colors

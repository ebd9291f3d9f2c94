# -*- coding: utf-8 -*-

from .model import Graph
from .model import Coloring
from .model import GameEvent
from .model import GameScript
from .model import GraphClass
from .model import GraphClassRule
from .model import apply_event
from .rules import Violation
from .rules import validate_event
from .rules import is_k_tree
from .rules import treewidth_at_most
from .rules import is_member
from .reduction import g0_as_events
from .reduction import to_partial_events
from .reduction import PartialReducer
from .reduction import reduce_partial_to_full
from .io import GraphDocument
from .io import dumps_script
from .io import loads_script
from .io import write_script
from .io import read_script
from .io import dumps_graph
from .io import loads_graph
from .io import write_graph
from .io import read_graph
from .io import dumps_coloring
from .io import loads_coloring
from .io import write_coloring
from .io import read_coloring

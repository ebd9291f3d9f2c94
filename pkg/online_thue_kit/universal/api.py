# -*- coding: utf-8 -*-

from .path_graph import OVertexId
from .path_graph import MAX_O_HORIZON
from .path_graph import o_vertex
from .path_graph import o_depth
from .path_graph import o_adjacent
from .path_graph import o_stage
from .path_graph import o_text
from .path_graph import o_count
from .path_graph import build_o
from .path_graph import monotone_path_count
from .ktree import UVertexId
from .ktree import UniversalKTree
from .ktree import get_universe
from .ktree import u_adjacent
from .ktree import u_stage
from .ktree import u_count
from .ktree import build_u
from .horizon import UniversalKind
from .horizon import Target
from .horizon import HorizonGraph
from .horizon import materialize_o
from .horizon import materialize_u
from .horizon import materialize
from .embedding import KTreeEmbedding
from .embedding import PathEmbedding
from .embedding import embed_ktree_step
from .embedding import embed_path_step
from .embedding import image_is_vertical
from .embedding import path_order
from .tracker import UniversalTracker
from .tracker import check_compatible
from .tracker import default_target
from .dump import dump
from .dump import dump_horizon

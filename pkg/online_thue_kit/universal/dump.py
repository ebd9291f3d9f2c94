# -*- coding: utf-8 -*-

"""
Debug dump of a universal horizon as a graph file plus an ``.ids`` sidecar
mapping every integer id to its canonical form.
"""

import typing as T
from pathlib import Path

from ..utils import dumps_line
from ..graph.io import GraphDocument, dumps_graph
from .horizon import HorizonGraph, Target, materialize


def sidecar_path(path: Path) -> Path:
    path = Path(path)
    return path.with_name(path.name + ".ids")


def dumps_ids(hg: HorizonGraph) -> str:
    return "".join(
        dumps_line({"id": i, "form": hg.text_of(i), "stage": hg.stage_of(i)}) + "\n"
        for i in hg.ids
    )


def dump_horizon(hg: HorizonGraph, path: Path) -> T.Tuple[Path, Path]:
    """
    :returns: the graph file and the sidecar written
    """
    path = Path(path)
    doc = GraphDocument.from_graph(hg.graph, heights=hg.heights)
    path.write_text(dumps_graph(doc))
    ids_path = sidecar_path(path)
    ids_path.write_text(dumps_ids(hg))
    return path, ids_path


def dump(target: Target, horizon: int, path: Path) -> T.Tuple[Path, Path]:
    """
    Materialize stages ``1 .. horizon`` of ``target`` and dump them.
    """
    return dump_horizon(materialize(target, horizon), path)

# -*- coding: utf-8 -*-

"""
Offline nonrepetitive coloring and the precomputation of frozen palettes.
"""

import typing as T
import random
import logging
from fractions import Fraction

from ..exc import SizeGuard, Unsatisfiable, PaletteFormatError
from ..sequences import find_repetition
from ..graph.model import Graph, Coloring
from ..repetition.structures import Digraph, RootedTree
from ..repetition.search import SearchGraph, has_repetition
from ..repetition.witness import RepetitionWitness
from ..repetition.colorer import Backtracker, CheckMode, search_graph_for
from ..universal.horizon import HorizonGraph, Target, UniversalKind, materialize
from .frozen import FrozenPalette, Verification, VerificationKind, ORDER_VERSION

logger = logging.getLogger(__name__)

#: deepest horizon per target that exhaustive verification accepts
EXHAUSTIVE_HORIZON: T.Dict[T.Tuple[UniversalKind, T.Optional[int]], int] = {
    (UniversalKind.O, None): 5,
    (UniversalKind.U, 1): 6,
    (UniversalKind.U, 2): 3,
}
#: fallback for U(k), k >= 3
EXHAUSTIVE_HORIZON_DEFAULT = 2


def exhaustive_horizon(target: Target) -> int:
    return EXHAUSTIVE_HORIZON.get((target.kind, target.k), EXHAUSTIVE_HORIZON_DEFAULT)


def offline_color(
    g: T.Union[Graph, Digraph, RootedTree],
    palette_size: int,
    mode: T.Union[str, CheckMode] = CheckMode.full,
    heights: T.Optional[T.Mapping[int, Fraction]] = None,
    max_half: T.Optional[int] = None,
    order: T.Optional[T.Sequence[int]] = None,
    node_cap: T.Optional[int] = None,
) -> Coloring:
    """
    Deterministic backtracking: vertices in ``order`` (sorted ids by
    default), smallest color first, checking only the repetitions through
    the vertex just colored.

    :raises Unsatisfiable: when no coloring exists; with ``max_half`` set
        this only refutes colorings free of short squares
    :raises BudgetExceeded: when ``node_cap`` placements did not settle it
    """
    sg = search_graph_for(g, mode, heights)
    if order is None:
        order = sg.vertices
    bt = Backtracker(sg, order, palette_size, max_half=max_half, node_cap=node_cap)
    colors = bt.run()
    logger.debug("offline_color: %d placements", bt.nodes)
    if colors is None:
        bound = "" if max_half is None else f" (squares up to half length {max_half})"
        raise Unsatisfiable(
            f"no nonrepetitive {CheckMode(mode).value} coloring with "
            f"{palette_size} colors{bound}"
        )
    return Coloring.new(colors, palette_size)


def verify_sampled(
    sg: SearchGraph,
    colors: T.Mapping[int, int],
    samples: int,
    max_len: int,
    seed: int,
) -> T.Optional[RepetitionWitness]:
    """
    Scan the color strings of ``samples`` random self-avoiding walks of up
    to ``max_len`` vertices.
    """
    rng = random.Random(seed)
    vertices = [v for v in sg.vertices if v in colors]
    if not vertices:
        return None
    for _ in range(samples):
        walk = [rng.choice(vertices)]
        on_walk = {walk[0]}
        while len(walk) < max_len:
            options = [u for u in sg.succ.get(walk[-1], ()) if u not in on_walk and u in colors]
            if not options:
                break
            u = rng.choice(options)
            walk.append(u)
            on_walk.add(u)
        hit = find_repetition([colors[v] for v in walk])
        if hit is not None:
            start, half = hit
            return RepetitionWitness.new(walk[start : start + 2 * half])
    return None


def _search_graph(hg: HorizonGraph, verification: Verification) -> SearchGraph:
    if verification.kind == VerificationKind.full:
        return hg.search_graph(vertical=False)
    if verification.kind == VerificationKind.vertical_full:
        return hg.search_graph(vertical=True)
    return hg.search_graph(vertical=hg.target.kind == UniversalKind.O)


def verify_palette(
    hg: HorizonGraph,
    colors: T.Mapping[int, int],
    verification: Verification,
) -> T.Optional[RepetitionWitness]:
    """
    Re-run ``verification`` on a coloring of the horizon graph ``hg``
    (keyed by integer id).
    """
    sg = _search_graph(hg, verification)
    if verification.kind == VerificationKind.sampled:
        found = has_repetition(sg, colors, max_half=verification.max_half)
        if found is not None:
            return found
        return verify_sampled(
            sg, colors, verification.samples, verification.max_len, verification.seed
        )
    return has_repetition(sg, colors, max_half=verification.max_half)


def _guard(target: Target, horizon: int, verification: Verification):
    if verification.kind == VerificationKind.vertical_full and target.kind != UniversalKind.O:
        raise ValueError("vertical verification needs the height-ordered target O")
    limit = exhaustive_horizon(target)
    if verification.is_exhaustive and horizon > limit:
        raise SizeGuard(
            f"exhaustive verification of {target.label} stops at horizon {limit}, "
            f"got {horizon}; declare bounded or sampled verification"
        )


def precompute(
    target: Target,
    palette_size: int,
    horizon: int,
    verification: Verification,
    node_cap: T.Optional[int] = None,
) -> FrozenPalette:
    """
    Color stages ``1 .. horizon`` of ``target`` by backtracking in canonical
    order (stage, then canonical form) and freeze the result.

    :raises Unsatisfiable: when the search is exhausted
    :raises SizeGuard: when exhaustive verification is asked beyond the
        feasible horizon
    """
    _guard(target, horizon, verification)
    logger.info(
        "precompute %s, %d colors, horizon %d, %s",
        target.label,
        palette_size,
        horizon,
        verification.label,
    )
    hg = materialize(target, horizon)
    sg = _search_graph(hg, verification)
    bt = Backtracker(
        sg,
        list(hg.ids),
        palette_size,
        max_half=verification.max_half,
        node_cap=node_cap,
    )
    colors = bt.run()
    if colors is None:
        raise Unsatisfiable(
            f"{target.label} up to stage {horizon} has no {verification.label} "
            f"coloring with {palette_size} colors"
        )
    if verification.kind == VerificationKind.sampled:
        w = verify_sampled(
            sg, colors, verification.samples, verification.max_len, verification.seed
        )
        if w is not None:
            raise Unsatisfiable(f"sampled verification found a repetition: {w}")
    logger.info(
        "precompute %s done: %d vertices, %d placements",
        target.label,
        len(colors),
        bt.nodes,
    )
    return FrozenPalette(
        target=target,
        horizon=horizon,
        palette_size=palette_size,
        assignment={hg.text_of(i): colors[i] for i in hg.ids},
        verification=verification,
        order_version=ORDER_VERSION,
    )


def reverify_palette(p: FrozenPalette):
    """
    Check that ``p`` covers its horizon exactly and, when its verification
    is exhaustive or bounded, that it still passes it. Larger horizons are
    only checked for coverage of the vertices they name.

    :raises PaletteFormatError: on a mismatch or a repetition
    """
    if p.order_version != ORDER_VERSION:
        raise PaletteFormatError(
            f"palette order version {p.order_version} differs from {ORDER_VERSION}"
        )
    if p.horizon > exhaustive_horizon(p.target):
        logger.info("palette horizon %d too deep to re-verify", p.horizon)
        return
    hg = materialize(p.target, p.horizon)
    if set(hg.texts) != set(p.assignment):
        raise PaletteFormatError(
            f"palette does not cover exactly the vertices of {p.target.label} "
            f"up to stage {p.horizon}"
        )
    colors = {i: p.assignment[hg.text_of(i)] for i in hg.ids}
    w = verify_palette(hg, colors, p.verification)
    if w is not None:
        raise PaletteFormatError(f"palette fails {p.verification.label}: {w}")

# -*- coding: utf-8 -*-

"""
Incremental injections of online games into the universal graphs.

Each step returns a new embedding that agrees with the old one on every
vertex it already mapped and adds exactly one entry. Games that share an
event prefix therefore share the embedding of that prefix.
"""

import typing as T
import dataclasses
from fractions import Fraction

from ..exc import InvalidEvent
from ..graph.model import Graph, GameEvent
from .path_graph import OVertexId
from .ktree import UVertexId, UniversalKTree

CliqueKey = T.Tuple[UVertexId, ...]


@dataclasses.dataclass(frozen=True)
class KTreeEmbedding:
    """
    Injection of an online k-tree into the universal k-tree.

    :param universe: the interner the images live in
    :param images: game vertex -> universal handle
    :param copies: sorted image clique -> last copy index used on it
    """

    universe: UniversalKTree = dataclasses.field()
    images: T.Mapping[int, UVertexId] = dataclasses.field()
    copies: T.Mapping[CliqueKey, int] = dataclasses.field(default_factory=dict)

    @property
    def k(self) -> int:
        return self.universe.k

    @classmethod
    def start(cls, universe: UniversalKTree, vertices: T.Iterable[int]) -> "KTreeEmbedding":
        """
        Map game vertex ``i`` of the initial clique to base vertex ``i - 1``.
        """
        return cls(
            universe=universe,
            images={v: universe.base(v - 1) for v in vertices},
        )

    def with_base(self, v: int) -> "KTreeEmbedding":
        """
        Map a late arrival of the initial clique (ids ``<= k + 1``) to its
        base vertex.
        """
        images = dict(self.images)
        images[v] = self.universe.base(v - 1)
        return dataclasses.replace(self, images=images)


def _ktree_image(
    emb: KTreeEmbedding,
    e: GameEvent,
) -> T.Tuple[CliqueKey, int]:
    if e.v in emb.images:
        raise InvalidEvent(f"step {e.t}: vertex {e.v} is already embedded")
    if len(e.attach) != emb.k:
        raise InvalidEvent(
            f"step {e.t}: attach set has {len(e.attach)} vertices, expected {emb.k}"
        )
    missing = [a for a in e.attach if a not in emb.images]
    if missing:
        raise InvalidEvent(f"step {e.t}: attach vertices {sorted(missing)} are not embedded")
    clique = tuple(sorted(emb.images[a] for a in e.attach))
    return clique, emb.copies.get(clique, 0) + 1


def preview_ktree_image(emb: KTreeEmbedding, e: GameEvent) -> UVertexId:
    """
    The handle :func:`embed_ktree_step` would assign, without recording it.
    """
    clique, copy = _ktree_image(emb, e)
    try:
        return emb.universe.derived(clique, copy)
    except ValueError as err:
        raise InvalidEvent(f"step {e.t}: {err}") from err


def embed_ktree_step(
    emb: KTreeEmbedding,
    g_prev: T.Optional[Graph],
    e: GameEvent,
) -> T.Tuple[KTreeEmbedding, UVertexId]:
    """
    Hang the new vertex on the image of its attach clique, using the next
    unused copy index of that clique in this session.

    :param g_prev: the game graph before ``e``; when given, the attach set
        must be a clique of it

    :raises InvalidEvent: when the attach set is not an embedded k-clique
    """
    if g_prev is not None and not g_prev.is_clique(sorted(e.attach)):
        raise InvalidEvent(f"step {e.t}: attach set is not a clique")
    clique, copy = _ktree_image(emb, e)
    try:
        image = emb.universe.derived(clique, copy)
    except ValueError as err:
        raise InvalidEvent(f"step {e.t}: {err}") from err
    images = dict(emb.images)
    images[e.v] = image
    copies = dict(emb.copies)
    copies[clique] = copy
    return KTreeEmbedding(universe=emb.universe, images=images, copies=copies), image


@dataclasses.dataclass(frozen=True)
class PathEmbedding:
    """
    Injection of an online path into the universal path graph.

    :param images: game vertex -> height
    :param low: lowest height used
    :param high: highest height used
    """

    images: T.Mapping[int, OVertexId] = dataclasses.field()
    low: OVertexId = dataclasses.field()
    high: OVertexId = dataclasses.field()

    @classmethod
    def start(cls) -> "PathEmbedding":
        """
        The single initial vertex sits at height 0.
        """
        zero = Fraction(0)
        return cls(images={1: zero}, low=zero, high=zero)


def _path_image(emb: PathEmbedding, e: GameEvent) -> OVertexId:
    if e.v in emb.images:
        raise InvalidEvent(f"step {e.t}: vertex {e.v} is already embedded")
    missing = [a for a in e.attach if a not in emb.images]
    if missing:
        raise InvalidEvent(f"step {e.t}: attach vertices {sorted(missing)} are not embedded")
    if len(e.attach) == 1 and not e.delete:
        (a,) = e.attach
        qa = emb.images[a]
        if len(emb.images) == 1:
            # the initial edge 0 - 1
            return Fraction(1)
        if qa == emb.high:
            return emb.high + 1
        if qa == emb.low:
            return emb.low - 1
        raise InvalidEvent(f"step {e.t}: vertex {a} is not an end of the path")
    if len(e.attach) == 2 and len(e.delete) == 1:
        a, b = sorted(e.attach)
        if e.delete != frozenset([(a, b)]):
            raise InvalidEvent(f"step {e.t}: a subdivision must delete the edge it splits")
        return (emb.images[a] + emb.images[b]) / 2
    raise InvalidEvent(f"step {e.t}: neither an end-append nor a subdivision")


def preview_path_image(emb: PathEmbedding, e: GameEvent) -> OVertexId:
    return _path_image(emb, e)


def embed_path_step(
    emb: PathEmbedding,
    g_prev: T.Optional[Graph],
    e: GameEvent,
) -> T.Tuple[PathEmbedding, OVertexId]:
    """
    A subdivision of ``a - b`` maps to the midpoint of their heights; an
    append maps one unit past the extreme height it extends (the first
    append maps to 1).

    :param g_prev: the game graph before ``e``; when given, a subdivided pair
        must be one of its edges

    :raises InvalidEvent: when ``e`` is not a path move
    """
    if g_prev is not None and len(e.attach) == 2:
        a, b = sorted(e.attach)
        if not g_prev.has_edge(a, b):
            raise InvalidEvent(f"step {e.t}: {(a, b)} is not an edge")
    image = _path_image(emb, e)
    images = dict(emb.images)
    images[e.v] = image
    return (
        PathEmbedding(
            images=images,
            low=min(emb.low, image),
            high=max(emb.high, image),
        ),
        image,
    )


def path_order(g: Graph) -> T.List[int]:
    """
    The vertices of the path ``g`` from its smaller end to its other end.

    :raises ValueError: when ``g`` is not a path
    """
    if len(g) == 1:
        return list(g.vertices)
    ends = sorted(v for v in g.vertices if g.degree(v) == 1)
    if len(ends) != 2 or len(g.edges) != len(g) - 1:
        raise ValueError("graph is not a path")
    order = [ends[0]]
    prev = None
    while len(order) < len(g):
        nxt = [u for u in g.neighbors(order[-1]) if u != prev]
        if len(nxt) != 1:
            raise ValueError("graph is not a path")
        prev = order[-1]
        order.append(nxt[0])
    return order


def image_is_vertical(emb: PathEmbedding, g: Graph) -> bool:
    """
    Whether the heights strictly increase along the path from one end to
    the other.
    """
    heights = [emb.images[v] for v in path_order(g)]
    pairs = list(zip(heights, heights[1:]))
    return all(a < b for a, b in pairs) or all(a > b for a, b in pairs)

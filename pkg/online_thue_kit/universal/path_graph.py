# -*- coding: utf-8 -*-

"""
The universal graph for online paths.

Its vertices are dyadic rationals (heights). Stage 1 is the edge ``0 - 1``.
Every later stage puts a vertex in the middle of each edge created by the
previous stage, joined to both ends, and appends one vertex below the lowest
and one above the highest vertex. In closed form two heights ``u != v`` are
adjacent iff ``|u - v| = 2^-max(depth(u), depth(v))``, where ``depth(q)`` is
the least ``s`` with ``q * 2^s`` integral.
"""

import typing as T
import math
from fractions import Fraction

from ..exc import SizeGuard

OVertexId = Fraction

#: widest horizon :func:`materialize_o` builds; O_20 has about two million vertices
MAX_O_HORIZON = 20


def o_vertex(q: T.Union[int, str, Fraction]) -> OVertexId:
    """
    Parse and validate a height.

    :raises ValueError: when ``q`` is not a dyadic rational
    """
    q = Fraction(q)
    den = q.denominator
    if den & (den - 1):
        raise ValueError(f"{q} is not a dyadic rational")
    return q


def o_depth(q: OVertexId) -> int:
    return q.denominator.bit_length() - 1


def o_adjacent(u: OVertexId, v: OVertexId) -> bool:
    """
    Example::

        >>> o_adjacent(Fraction(0), Fraction(1, 2))
        True
        >>> o_adjacent(Fraction(1, 4), Fraction(3, 4))
        False
    """
    if u == v:
        return False
    return abs(u - v) == Fraction(1, 2 ** max(o_depth(u), o_depth(v)))


def _outside_distance(q: OVertexId) -> int:
    if q < 0:
        return math.ceil(-q)
    if q > 1:
        return math.ceil(q - 1)
    return 0


def o_stage(q: OVertexId) -> int:
    """
    The first stage whose graph contains ``q``: the distance from ``[0, 1]``
    rounded up, plus the depth, plus one.
    """
    return _outside_distance(q) + o_depth(q) + 1


def o_text(q: OVertexId) -> str:
    """
    Canonical text of a height, ``"numerator/2^depth"``.
    """
    return f"{q.numerator}/2^{o_depth(q)}"


def o_sort_key(q: OVertexId) -> T.Tuple[int, Fraction]:
    return o_stage(q), q


class OConstruction(T.NamedTuple):
    """
    Result of building stages ``1 .. d`` the recursive way.

    :param vertices: every height, in canonical order (stage, then height)
    :param edges: ``(low, high)`` height pairs
    :param new_edges: the edges created by the last stage
    """

    vertices: T.Tuple[OVertexId, ...]
    edges: T.FrozenSet[T.Tuple[OVertexId, OVertexId]]
    new_edges: T.Tuple[T.Tuple[OVertexId, OVertexId], ...]


def build_o(d: int) -> OConstruction:
    """
    Build stage ``d`` by following the construction step by step (no closed
    forms), which is what the closed forms are tested against.

    :raises SizeGuard: when ``d`` exceeds :data:`MAX_O_HORIZON`
    """
    if d < 1:
        raise ValueError(f"horizon must be >= 1, got {d}")
    if d > MAX_O_HORIZON:
        raise SizeGuard(f"O_{d} is too large to build (limit {MAX_O_HORIZON})")
    zero, one = Fraction(0), Fraction(1)
    vertices = [zero, one]
    edges = {(zero, one)}
    new_edges = [(zero, one)]
    low, high = zero, one
    for _ in range(d - 1):
        created = []
        for a, b in new_edges:
            m = (a + b) / 2
            vertices.append(m)
            created.append((a, m))
            created.append((m, b))
        low_next, high_next = low - 1, high + 1
        vertices.append(low_next)
        vertices.append(high_next)
        created.append((low_next, low))
        created.append((high, high_next))
        low, high = low_next, high_next
        edges.update(created)
        new_edges = created
    return OConstruction(
        vertices=tuple(sorted(vertices, key=o_sort_key)),
        edges=frozenset(edges),
        new_edges=tuple(sorted(new_edges)),
    )


def o_count(d: int) -> int:
    """
    ``|V(O_d)|``, which follows ``n_1 = 2`` and ``n_{i+1} = 2 n_i + 1``.
    """
    return 3 * 2 ** (d - 1) - 1


def monotone_path_count(d: int) -> int:
    """
    Number of height-monotone paths spanning one interval ``d`` levels deep:
    either use the edge or pass through the midpoint, recursing into both
    halves. ``1, 2, 5, 26, 677, ...``
    """
    count = 1
    for _ in range(d):
        count = 1 + count * count
    return count

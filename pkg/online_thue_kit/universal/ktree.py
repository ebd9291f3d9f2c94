# -*- coding: utf-8 -*-

"""
The universal k-tree.

Stage 1 is the clique on the base vertices ``b0 .. bk``. Every later stage
adds, for each k-clique of the previous stage, one new vertex joined to that
clique. A vertex is therefore either a base vertex or a *derived* vertex
``(Q, j)``: the ``j``-th copy hung on the k-clique ``Q``, born at stage
``max(stage of Q's members) + j``. Two vertices are adjacent iff both are
base vertices or one is derived from a clique containing the other.

Identities are recursive, so they are hash-consed into integer handles by a
:class:`UniversalKTree`, one per ``k`` and shared by every session of the
process.
"""

import typing as T
import itertools
import threading

from ..exc import SizeGuard

UVertexId = int

#: largest vertex count :func:`u_count` and materialization will build
DEFAULT_U_VERTEX_BUDGET = 200_000


class UniversalKTree:
    """
    Interner of universal k-tree identities.

    Interning is guarded by a lock; every other method reads immutable
    per-handle records, so handles may be shared across threads.

    :param k: the width
    """

    def __init__(self, k: int):
        if k < 1:
            raise ValueError(f"k must be >= 1, got {k}")
        self.k = k
        self._lock = threading.Lock()
        self._index: T.Dict[tuple, UVertexId] = {}
        self._members: T.List[T.Tuple[UVertexId, ...]] = []
        self._copy: T.List[int] = []
        self._base_index: T.List[T.Optional[int]] = []
        self._stage: T.List[int] = []
        self._text: T.Dict[UVertexId, str] = {}
        self._member_sets: T.List[T.FrozenSet[UVertexId]] = []

    def _intern(
        self,
        key: tuple,
        members: T.Tuple[UVertexId, ...],
        copy: int,
        base_index: T.Optional[int],
        stage: int,
    ) -> UVertexId:
        with self._lock:
            handle = self._index.get(key)
            if handle is None:
                handle = len(self._members)
                self._members.append(members)
                self._member_sets.append(frozenset(members))
                self._copy.append(copy)
                self._base_index.append(base_index)
                self._stage.append(stage)
                self._index[key] = handle
            return handle

    def base(self, i: int) -> UVertexId:
        if not 0 <= i <= self.k:
            raise ValueError(f"base index must be in 0..{self.k}, got {i}")
        return self._intern(("b", i), (), 0, i, 1)

    def bases(self) -> T.List[UVertexId]:
        return [self.base(i) for i in range(self.k + 1)]

    def derived(self, clique: T.Iterable[UVertexId], copy: int) -> UVertexId:
        """
        The ``copy``-th vertex hung on ``clique``.

        :raises ValueError: when ``clique`` does not have ``k`` pairwise
            adjacent members or ``copy < 1``
        """
        members = tuple(sorted(set(clique)))
        if len(members) != self.k:
            raise ValueError(f"clique must have {self.k} members, got {len(members)}")
        if copy < 1:
            raise ValueError(f"copy index must be >= 1, got {copy}")
        for i, a in enumerate(members):
            for b in members[i + 1 :]:
                if not self.adjacent(a, b):
                    raise ValueError(f"clique members {a} and {b} are not adjacent")
        stage = max(self._stage[m] for m in members) + copy
        return self._intern(("d", members, copy), members, copy, None, stage)

    def is_base(self, h: UVertexId) -> bool:
        return self._base_index[h] is not None

    def members(self, h: UVertexId) -> T.Tuple[UVertexId, ...]:
        return self._members[h]

    def copy_index(self, h: UVertexId) -> int:
        return self._copy[h]

    def stage(self, h: UVertexId) -> int:
        return self._stage[h]

    def adjacent(self, a: UVertexId, b: UVertexId) -> bool:
        if a == b:
            return False
        if self.is_base(a) and self.is_base(b):
            return True
        return a in self._member_sets[b] or b in self._member_sets[a]

    def text(self, h: UVertexId) -> str:
        """
        Canonical text: ``b{i}`` for base vertices, ``d{j}(m1,..,mk)`` for
        derived ones with members in canonical order. Its length grows with
        the stage, so it is only computed on request.
        """
        cached = self._text.get(h)
        if cached is not None:
            return cached
        if self.is_base(h):
            text = f"b{self._base_index[h]}"
        else:
            parts = [self.text(m) for m in sorted(self._members[h], key=self.sort_key)]
            text = f"d{self._copy[h]}({','.join(parts)})"
        self._text[h] = text
        return text

    def sort_key(self, h: UVertexId) -> T.Tuple[int, str]:
        return self._stage[h], self.text(h)


_universes: T.Dict[int, UniversalKTree] = {}
_universes_lock = threading.Lock()


def get_universe(k: int) -> UniversalKTree:
    """
    The process-wide interner for width ``k``.
    """
    with _universes_lock:
        universe = _universes.get(k)
        if universe is None:
            universe = UniversalKTree(k)
            _universes[k] = universe
        return universe


def u_adjacent(k: int, a: UVertexId, b: UVertexId) -> bool:
    return get_universe(k).adjacent(a, b)


def u_stage(k: int, h: UVertexId) -> int:
    return get_universe(k).stage(h)


class UConstruction(T.NamedTuple):
    """
    Stages ``1 .. d`` of the universal k-tree.

    :param vertices: handles in canonical order (stage, then text)
    :param edges: handle pairs ``(low, high)``
    """

    vertices: T.Tuple[UVertexId, ...]
    edges: T.FrozenSet[T.Tuple[UVertexId, UVertexId]]


def build_u(
    k: int,
    d: int,
    vertex_budget: int = DEFAULT_U_VERTEX_BUDGET,
) -> UConstruction:
    """
    Build stage ``d`` breadth first, tracking the k-cliques: each new vertex
    on clique ``Q`` opens ``k`` new cliques (``Q`` with one member swapped for
    the new vertex).

    :raises SizeGuard: when the vertex count would pass ``vertex_budget``
    """
    if d < 1:
        raise ValueError(f"horizon must be >= 1, got {d}")
    universe = get_universe(k)
    bases = universe.bases()
    vertices = list(bases)
    edges = {(a, b) for a, b in itertools.combinations(sorted(bases), 2)}
    cliques = [tuple(q) for q in itertools.combinations(sorted(bases), k)]
    for stage in range(2, d + 1):
        if len(vertices) + len(cliques) > vertex_budget:
            raise SizeGuard(
                f"U_{stage} of the universal {k}-tree has more than {vertex_budget} vertices"
            )
        opened = []
        for q in cliques:
            copy = stage - max(universe.stage(m) for m in q)
            w = universe.derived(q, copy)
            vertices.append(w)
            for m in q:
                edges.add((m, w) if m < w else (w, m))
            for i in range(k):
                opened.append(tuple(sorted(q[:i] + q[i + 1 :] + (w,))))
        cliques.extend(opened)
    return UConstruction(
        vertices=tuple(sorted(vertices, key=universe.sort_key)),
        edges=frozenset(edges),
    )


def u_count(
    k: int,
    i: int,
    vertex_budget: int = DEFAULT_U_VERTEX_BUDGET,
) -> int:
    """
    ``|V(U_i)|`` of the universal k-tree, by materialization.

    Example::

        >>> [u_count(1, i) for i in range(1, 5)]
        [2, 4, 8, 16]
        >>> [u_count(2, i) for i in range(1, 5)]
        [3, 6, 15, 42]
    """
    return len(build_u(k, i, vertex_budget).vertices)

# -*- coding: utf-8 -*-

"""
Square-free (nonrepetitive) symbol sequences.

A *repetition* (square) is a block ``x_1 .. x_2l`` whose first half equals its
second half position by position. A sequence is *nonrepetitive* when no block
of consecutive entries is a repetition.

The long-sequence scan :func:`find_repetition` is vectorized with numpy, one
pass per half length. The helpers :func:`square_through` and
:func:`suffix_square` are the small pure-Python checks the game solvers call
on every move.
"""

import typing as T
import dataclasses

import numpy as np

# Morphism whose fixed point (starting from 0) is the square-free ternary word
# used everywhere in this package. Palette determinism depends on it, so it
# must never change.
THUE_MORPHISM: T.Dict[int, T.Tuple[int, ...]] = {
    0: (0, 1, 2),
    1: (0, 2),
    2: (1,),
}


@dataclasses.dataclass(frozen=True)
class SymbolSeq:
    """
    A finite sequence of small non-negative integers over a declared
    alphabet.

    :param symbols: the symbols, in order
    :param alphabet_size: every symbol is ``< alphabet_size``
    """

    symbols: T.Tuple[int, ...] = dataclasses.field()
    alphabet_size: int = dataclasses.field()

    def __post_init__(self):
        for s in self.symbols:
            if not 0 <= s < self.alphabet_size:
                raise ValueError(
                    f"symbol {s} outside alphabet of size {self.alphabet_size}"
                )

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> T.Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, item):
        return self.symbols[item]


def find_repetition(
    seq: T.Sequence[int],
) -> T.Optional[T.Tuple[int, int]]:
    """
    Locate a repetition in ``seq``.

    Among all blocks ``seq[start : start + 2 * half_len]`` whose halves are
    equal, return the one with the smallest ``start``, breaking ties by the
    smallest ``half_len``.

    :returns: ``(start, half_len)`` or ``None`` when ``seq`` is nonrepetitive

    Example::

        >>> find_repetition([1, 1])
        (0, 1)
        >>> find_repetition([0, 1, 0]) is None
        True
    """
    arr = np.asarray(list(seq), dtype=np.int64)
    n = arr.shape[0]
    best: T.Optional[T.Tuple[int, int]] = None
    for half in range(1, n // 2 + 1):
        # eq[i] <=> arr[i] == arr[i + half]
        eq = arr[: n - half] == arr[half:]
        cs = np.concatenate(([0], np.cumsum(eq, dtype=np.int64)))
        # window[i] counts matches in eq[i : i + half]
        window = cs[half : n - half + 1] - cs[0 : n - 2 * half + 1]
        hits = np.flatnonzero(window == half)
        if hits.size:
            start = int(hits[0])
            if best is None or start < best[0]:
                best = (start, half)
                if start == 0:
                    break
    return best


def is_nonrepetitive(seq: T.Sequence[int]) -> bool:
    return find_repetition(seq) is None


def square_through(
    seq: T.Sequence[int],
    pos: int,
) -> T.Optional[T.Tuple[int, int]]:
    """
    Find a repetition whose block contains index ``pos``.

    Meant for short sequences where only blocks through one freshly placed
    symbol can be new. Returns the shortest such block, leftmost among equals.
    """
    n = len(seq)
    for half in range(1, n // 2 + 1):
        lo = max(0, pos - 2 * half + 1)
        hi = min(pos, n - 2 * half)
        for start in range(lo, hi + 1):
            if all(seq[start + i] == seq[start + half + i] for i in range(half)):
                return start, half
    return None


def suffix_square(seq: T.Sequence[int]) -> T.Optional[int]:
    """
    Return the smallest half length of a repetition ending at the last
    symbol, or ``None``.
    """
    n = len(seq)
    for half in range(1, n // 2 + 1):
        if all(seq[n - 2 * half + i] == seq[n - half + i] for i in range(half)):
            return half
    return None


def thue_ternary(n: int) -> SymbolSeq:
    """
    Return the length-``n`` prefix of the fixed point of
    ``0 -> 012, 1 -> 02, 2 -> 1`` starting from ``0``.

    The word is square-free, so every prefix is nonrepetitive, and
    ``thue_ternary(n)`` is always a prefix of ``thue_ternary(n + 1)``.

    Example::

        >>> list(thue_ternary(6))
        [0, 1, 2, 0, 2, 1]
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    word: T.List[int] = [0]
    while len(word) < n:
        nxt: T.List[int] = []
        for s in word:
            nxt.extend(THUE_MORPHISM[s])
        word = nxt
    return SymbolSeq(symbols=tuple(word[:n]), alphabet_size=3)

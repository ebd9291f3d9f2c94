# -*- coding: utf-8 -*-

import typing as T
import dataclasses


@dataclasses.dataclass(frozen=True)
class RepetitionWitness:
    """
    A path ``v_1 .. v_2l`` whose color string is a repetition.

    :param path: the vertices in order (for a sequence, the 0-based positions)
    :param half_len: ``l``
    """

    path: T.Tuple[int, ...] = dataclasses.field()
    half_len: int = dataclasses.field()

    def __post_init__(self):
        if self.half_len < 1:
            raise ValueError(f"half_len must be >= 1, got {self.half_len}")
        if len(self.path) != 2 * self.half_len:
            raise ValueError(
                f"path of length {len(self.path)} does not match half_len {self.half_len}"
            )

    @classmethod
    def new(cls, path: T.Iterable[int]) -> "RepetitionWitness":
        path = tuple(path)
        return cls(path=path, half_len=len(path) // 2)

    @property
    def first_half(self) -> T.Tuple[int, ...]:
        return self.path[: self.half_len]

    @property
    def second_half(self) -> T.Tuple[int, ...]:
        return self.path[self.half_len :]

    def sort_key(self) -> T.Tuple[int, T.Tuple[int, ...]]:
        """
        Shortest first, then the lexicographically smallest vertex sequence.
        """
        return self.half_len, self.path

    def to_record(self) -> T.Dict[str, T.Any]:
        return {"path": list(self.path), "half_len": self.half_len}

    def __str__(self) -> str:
        return f"{list(self.path)} (half length {self.half_len})"


def revalidate(
    w: RepetitionWitness,
    colors: T.Mapping[int, int],
    adjacent: T.Callable[[int, int], bool],
) -> bool:
    """
    Check ``w`` from scratch: the path is simple, consecutive vertices are
    adjacent (``adjacent(a, b)`` is asked in path order, so a directed check
    passes an arc test) and the two halves carry the same colors.
    """
    if len(set(w.path)) != len(w.path):
        return False
    for a, b in zip(w.path, w.path[1:]):
        if not adjacent(a, b):
            return False
    return all(colors[a] == colors[b] for a, b in zip(w.first_half, w.second_half))

# -*- coding: utf-8 -*-

"""
Persisted colorings of universal graphs up to a horizon stage.

A palette file is JSON lines: one header, then one ``{"id","color"}``
record per vertex sorted by canonical text::

    {"format":"online-thue-palette","version":1,"target":"O","k":null,...}
    {"id":"-1/2^0","color":2}
"""

import typing as T
import enum
import dataclasses
import logging
from fractions import Fraction
from pathlib import Path

from ..exc import HorizonExceeded, PaletteFormatError
from ..utils import dumps_line, iter_records
from ..universal.horizon import Target, UniversalKind
from ..universal.path_graph import o_stage, o_text
from ..universal.ktree import get_universe

logger = logging.getLogger(__name__)

PALETTE_FORMAT = "online-thue-palette"
PALETTE_VERSION = 1
#: bump whenever the backtracking order or the square-free word changes
ORDER_VERSION = 1


class VerificationKind(str, enum.Enum):
    full = "full"
    vertical_full = "vertical_full"
    bounded = "bounded"
    sampled = "sampled"


@dataclasses.dataclass(frozen=True)
class Verification:
    """
    How thoroughly a palette was checked.

    :param kind: the level
    :param max_half: half length bound (``bounded`` and ``sampled``)
    :param samples: number of random walks (``sampled``)
    :param max_len: longest random walk (``sampled``)
    :param seed: walk seed (``sampled``)
    """

    kind: VerificationKind = dataclasses.field()
    max_half: T.Optional[int] = dataclasses.field(default=None)
    samples: T.Optional[int] = dataclasses.field(default=None)
    max_len: T.Optional[int] = dataclasses.field(default=None)
    seed: T.Optional[int] = dataclasses.field(default=None)

    def __post_init__(self):
        if self.kind in (VerificationKind.bounded, VerificationKind.sampled):
            if self.max_half is None or self.max_half < 1:
                raise ValueError(f"{self.kind.value} verification needs max_half >= 1")
        if self.kind == VerificationKind.sampled:
            if not self.samples or not self.max_len or self.seed is None:
                raise ValueError("sampled verification needs samples, max_len and seed")

    @classmethod
    def full(cls) -> "Verification":
        return cls(kind=VerificationKind.full)

    @classmethod
    def vertical_full(cls) -> "Verification":
        return cls(kind=VerificationKind.vertical_full)

    @classmethod
    def bounded(cls, max_half: int) -> "Verification":
        return cls(kind=VerificationKind.bounded, max_half=max_half)

    @classmethod
    def sampled(cls, max_half: int, samples: int, max_len: int, seed: int) -> "Verification":
        return cls(
            kind=VerificationKind.sampled,
            max_half=max_half,
            samples=samples,
            max_len=max_len,
            seed=seed,
        )

    @classmethod
    def parse(cls, text: str) -> "Verification":
        """
        ``full``, ``vertical-full``, ``bounded:L`` or
        ``sampled:L:SAMPLES:MAXLEN:SEED``.
        """
        parts = text.strip().replace("-", "_").split(":")
        kind = VerificationKind(parts[0])
        try:
            numbers = [int(p) for p in parts[1:]]
        except ValueError:
            raise ValueError(f"bad verification level {text!r}")
        if kind == VerificationKind.bounded and len(numbers) == 1:
            return cls.bounded(numbers[0])
        if kind == VerificationKind.sampled and len(numbers) == 4:
            return cls.sampled(*numbers)
        if kind in (VerificationKind.full, VerificationKind.vertical_full) and not numbers:
            return cls(kind=kind)
        raise ValueError(f"bad verification level {text!r}")

    @property
    def is_exhaustive(self) -> bool:
        return self.kind in (VerificationKind.full, VerificationKind.vertical_full)

    @property
    def label(self) -> str:
        if self.kind == VerificationKind.bounded:
            return f"bounded({self.max_half})"
        if self.kind == VerificationKind.sampled:
            return (
                f"sampled(L={self.max_half},n={self.samples},"
                f"len={self.max_len},seed={self.seed})"
            )
        return self.kind.value

    def to_record(self) -> T.Dict[str, T.Any]:
        return {
            "kind": self.kind.value,
            "max_half": self.max_half,
            "samples": self.samples,
            "max_len": self.max_len,
            "seed": self.seed,
        }

    @classmethod
    def from_record(cls, record: T.Mapping[str, T.Any]) -> "Verification":
        return cls(
            kind=VerificationKind(record["kind"]),
            max_half=record.get("max_half"),
            samples=record.get("samples"),
            max_len=record.get("max_len"),
            seed=record.get("seed"),
        )


@dataclasses.dataclass(frozen=True)
class FrozenPalette:
    """
    A deterministic coloring of stages ``1 .. horizon`` of ``target``.

    :param target: the universal graph
    :param horizon: the last stage colored
    :param palette_size: colors ``1 .. palette_size``
    :param assignment: canonical text -> color
    :param verification: how the coloring was checked
    :param order_version: version of the search order that produced it
    """

    target: Target = dataclasses.field()
    horizon: int = dataclasses.field()
    palette_size: int = dataclasses.field()
    assignment: T.Mapping[str, int] = dataclasses.field()
    verification: Verification = dataclasses.field()
    order_version: int = dataclasses.field(default=ORDER_VERSION)

    def __post_init__(self):
        if self.horizon < 1:
            raise ValueError(f"horizon must be >= 1, got {self.horizon}")
        for key, color in self.assignment.items():
            if not 1 <= color <= self.palette_size:
                raise ValueError(
                    f"{key} has color {color} outside palette 1..{self.palette_size}"
                )

    def __len__(self) -> int:
        return len(self.assignment)

    def header(self) -> T.Dict[str, T.Any]:
        return {
            "format": PALETTE_FORMAT,
            "version": PALETTE_VERSION,
            "target": self.target.kind.value,
            "k": self.target.k,
            "horizon": self.horizon,
            "palette_size": self.palette_size,
            "verification": self.verification.to_record(),
            "order_version": self.order_version,
        }


def color_of(p: FrozenPalette, image: T.Union[Fraction, int]) -> int:
    """
    Look up the color of a universal vertex.

    :raises HorizonExceeded: when the vertex is born after the horizon
    """
    stage, text = _stage_and_text(p, image)
    if text is None:
        raise HorizonExceeded(stage, p.horizon)
    try:
        return p.assignment[text]
    except KeyError:
        raise PaletteFormatError(
            f"palette misses {text} although its stage {stage} is within the horizon"
        )


def _stage_and_text(
    p: FrozenPalette,
    image: T.Union[Fraction, int],
) -> T.Tuple[int, T.Optional[str]]:
    """
    Stage and canonical text of a height (O) or interned handle (U). The
    text is skipped (``None``) beyond the horizon, where it may be long.
    """
    if p.target.kind == UniversalKind.O:
        stage = o_stage(image)
        return stage, (o_text(image) if stage <= p.horizon else None)
    universe = get_universe(p.target.k)
    stage = universe.stage(image)
    if stage > p.horizon:
        return stage, None
    return stage, universe.text(image)


def dumps_palette(p: FrozenPalette) -> str:
    lines = [dumps_line(p.header())]
    for key in sorted(p.assignment):
        lines.append(dumps_line({"id": key, "color": p.assignment[key]}))
    return "\n".join(lines) + "\n"


def loads_palette(text: str) -> FrozenPalette:
    """
    Parse a palette file without re-verifying it.

    :raises PaletteFormatError: on an unknown format or version, or a
        malformed header
    """
    try:
        records = list(iter_records(text))
    except ValueError as e:
        raise PaletteFormatError(str(e)) from e
    if not records:
        raise PaletteFormatError("empty palette file")
    header = records[0]
    if header.get("format") != PALETTE_FORMAT:
        raise PaletteFormatError(f"not a palette file: {header.get('format')!r}")
    if header.get("version") != PALETTE_VERSION:
        raise PaletteFormatError(
            f"unsupported palette version {header.get('version')!r}, "
            f"expected {PALETTE_VERSION}"
        )
    try:
        kind = UniversalKind(header["target"])
        target = Target(kind=kind, k=header.get("k"))
        assignment = {str(r["id"]): int(r["color"]) for r in records[1:]}
        return FrozenPalette(
            target=target,
            horizon=int(header["horizon"]),
            palette_size=int(header["palette_size"]),
            assignment=assignment,
            verification=Verification.from_record(header["verification"]),
            order_version=int(header["order_version"]),
        )
    except (KeyError, TypeError, ValueError) as e:
        raise PaletteFormatError(f"malformed palette: {e}") from e


def save(p: FrozenPalette, path: Path):
    Path(path).write_text(dumps_palette(p))
    logger.info("palette %s d=%d written to %s", p.target.label, p.horizon, path)


def load(path: Path, reverify: bool = True) -> FrozenPalette:
    """
    Read a palette file.

    :param reverify: re-run the recorded verification when it is exhaustive
        and the horizon is small enough to materialize

    :raises PaletteFormatError: on a bad file or a failed re-verification
    """
    p = loads_palette(Path(path).read_text())
    if reverify:
        from .precompute import reverify_palette

        reverify_palette(p)
    return p

# -*- coding: utf-8 -*-

"""
Run configuration shared by the command line subcommands.
"""

import typing as T
import argparse
import dataclasses
from pathlib import Path
from functools import cached_property

from .graph.model import GraphClassRule
from .universal.horizon import Target
from .palette.frozen import Verification, load
from .engine.session import FrozenOracle, LazyOracle, Oracle, SessionConfig


def parse_oracle(text: str) -> T.Tuple[str, T.Any]:
    """
    Split an oracle spec: ``frozen:FILE``, ``lazy:N`` or ``lazy:N:TARGET``.

    :returns: ``("frozen", Path)`` or ``("lazy", (N, Target or None))``
    :raises ValueError: on anything else
    """
    kind, _, rest = text.partition(":")
    if kind == "frozen" and rest:
        return kind, Path(rest)
    if kind == "lazy" and rest:
        size, _, target = rest.partition(":")
        try:
            n = int(size)
        except ValueError:
            raise ValueError(f"bad oracle {text!r}: palette size must be an integer")
        return kind, (n, Target.parse(target) if target else None)
    raise ValueError(f"bad oracle {text!r}, expected frozen:FILE or lazy:N[:TARGET]")


@dataclasses.dataclass
class Config:
    """
    Everything a subcommand may need. Fields a subcommand does not use stay
    ``None``; whatever is set is validated before any work starts.

    :param graph_class: graph class name
    :param k: width for k-tree classes
    :param palette_size: number of colors
    :param oracle: oracle spec, see :func:`parse_oracle`
    :param horizon: last universal stage
    :param verification: verification level, see :meth:`Verification.parse`
    :param seed: random seed; drawn and logged when omitted
    :param node_cap: solver / backtracking node cap
    :param max_half: half length bound for bounded checks
    :param vertex_budget: largest instance for exhaustive checks
    :param self_check: re-check every delivered step
    :param universal_check: lazy mode also polices the universal subgraph
    :param out: primary output file
    """

    graph_class: T.Optional[str] = dataclasses.field(default=None)
    k: T.Optional[int] = dataclasses.field(default=None)
    palette_size: T.Optional[int] = dataclasses.field(default=None)
    oracle: T.Optional[str] = dataclasses.field(default=None)
    horizon: T.Optional[int] = dataclasses.field(default=None)
    verification: T.Optional[str] = dataclasses.field(default=None)
    seed: T.Optional[int] = dataclasses.field(default=None)
    node_cap: T.Optional[int] = dataclasses.field(default=None)
    max_half: int = dataclasses.field(default=8)
    vertex_budget: T.Optional[int] = dataclasses.field(default=None)
    self_check: bool = dataclasses.field(default=True)
    universal_check: bool = dataclasses.field(default=True)
    out: T.Optional[Path] = dataclasses.field(default=None)

    def __post_init__(self):
        for name in ("palette_size", "horizon", "node_cap", "vertex_budget"):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise ValueError(f"{name} must be >= 1, got {value}")
        if self.max_half < 1:
            raise ValueError(f"max_half must be >= 1, got {self.max_half}")
        if self.graph_class is not None:
            _ = self.rule
        elif self.k is not None:
            raise ValueError("k given without a graph class")
        if self.oracle is not None:
            parse_oracle(self.oracle)
        if self.verification is not None:
            _ = self.verification_level

    @classmethod
    def from_namespace(cls, ns: argparse.Namespace) -> "Config":
        kwargs = {}
        for field in dataclasses.fields(cls):
            value = getattr(ns, field.name, None)
            if value is None and field.default is not None:
                continue
            if hasattr(ns, field.name):
                kwargs[field.name] = value
        if kwargs.get("out") is not None:
            kwargs["out"] = Path(kwargs["out"])
        return cls(**kwargs)

    @cached_property
    def rule(self) -> GraphClassRule:
        if self.graph_class is None:
            raise ValueError("no graph class given")
        return GraphClassRule.new(self.graph_class, self.k)

    @cached_property
    def verification_level(self) -> Verification:
        if self.verification is None:
            return Verification.full()
        return Verification.parse(self.verification)

    @property
    def session_config(self) -> SessionConfig:
        return SessionConfig(
            self_check=self.self_check,
            max_half=self.max_half,
            lazy_universal_check=self.universal_check,
        )

    def build_oracle(self) -> Oracle:
        """
        :raises PaletteFormatError: when a frozen palette fails to load
        """
        if self.oracle is None:
            raise ValueError("no oracle given")
        kind, arg = parse_oracle(self.oracle)
        if kind == "frozen":
            return FrozenOracle(load(arg))
        size, target = arg
        return LazyOracle(size, target)

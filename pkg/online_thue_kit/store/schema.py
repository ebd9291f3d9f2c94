# -*- coding: utf-8 -*-

"""
Tables of the results store.
"""

import typing as T
from datetime import datetime

import sqlalchemy as sa
import sqlalchemy.orm as orm


class Base(orm.DeclarativeBase):
    def to_dict(self) -> T.Dict[str, T.Any]:
        return {c.name: getattr(self, c.name, None) for c in self.__table__.columns}


class CorpusRecord(Base):
    """
    Outcome of one scripted game (or solver run) of a corpus.

    :param scenario_id: stable id, ``{class}-{oracle}-{seed}-{n}``; re-running
        a scenario replaces its row
    :param cls: graph class label
    :param k: width for k-tree classes
    :param oracle: oracle label, e.g. ``lazy:12`` or ``frozen:O:d5``
    :param palette_size: number of colors
    :param seed: seed of the random game
    :param events: number of events played
    :param outcome: ``ok``, ``exhausted``, ``horizon`` or ``witness``
    :param exhausted: number of :class:`PaletteExhausted` raised
    :param witness: JSON witness when the delivered coloring failed its check
    :param elapsed_ms: wall clock of the run
    :param create_at: when the row was written
    """

    __tablename__ = "corpus"

    scenario_id: orm.Mapped[str] = orm.mapped_column(primary_key=True)
    cls: orm.Mapped[str] = orm.mapped_column(sa.String, nullable=False, index=True)
    k: orm.Mapped[T.Optional[int]] = orm.mapped_column()
    oracle: orm.Mapped[str] = orm.mapped_column(nullable=False)
    palette_size: orm.Mapped[int] = orm.mapped_column(nullable=False)
    seed: orm.Mapped[int] = orm.mapped_column(nullable=False)
    events: orm.Mapped[int] = orm.mapped_column(nullable=False)
    outcome: orm.Mapped[str] = orm.mapped_column(nullable=False)
    exhausted: orm.Mapped[int] = orm.mapped_column(default=0, nullable=False)
    witness: orm.Mapped[T.Optional[str]] = orm.mapped_column()
    elapsed_ms: orm.Mapped[int] = orm.mapped_column(default=0, nullable=False)
    create_at: orm.Mapped[datetime] = orm.mapped_column(
        server_default=sa.func.now(),
        nullable=False,
    )


t_corpus: sa.Table = CorpusRecord.__table__

# -*- coding: utf-8 -*-

"""
SQLite store of corpus outcomes.
"""

import typing as T
import dataclasses
import logging
from pathlib import Path

import sqlalchemy as sa

from .schema import Base, CorpusRecord, t_corpus
from .executor import insert_or_replace

logger = logging.getLogger(__name__)


@dataclasses.dataclass
class ResultStore:
    engine: sa.Engine = dataclasses.field()

    @classmethod
    def new(cls, path: T.Union[str, Path]) -> "ResultStore":
        """
        Open (and create if needed) the store at ``path``.
        """
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        engine = sa.create_engine(f"sqlite:///{path}")
        Base.metadata.create_all(engine)
        return cls(engine=engine)

    def record(self, rows: T.List[T.Dict[str, T.Any]]) -> T.Tuple[int, int]:
        """
        Write rows of :class:`CorpusRecord` fields, replacing earlier runs of
        the same scenarios.

        :return: ``(replaced_rows, inserted_rows)``
        """
        replaced, inserted = insert_or_replace(self.engine, t_corpus, rows)
        logger.info("store: %d replaced, %d inserted", replaced, inserted)
        return replaced, inserted

    def fetch(self, cls: T.Optional[str] = None) -> T.List[T.Dict[str, T.Any]]:
        """
        Rows ordered by scenario id, optionally of one graph class only.
        """
        stmt = sa.select(t_corpus).order_by(t_corpus.c.scenario_id)
        if cls is not None:
            stmt = stmt.where(t_corpus.c.cls == cls)
        with self.engine.connect() as conn:
            return [dict(row._mapping) for row in conn.execute(stmt)]

    def count(self) -> int:
        with self.engine.connect() as conn:
            return conn.execute(sa.select(sa.func.count()).select_from(t_corpus)).scalar_one()

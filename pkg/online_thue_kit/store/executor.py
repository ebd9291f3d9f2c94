# -*- coding: utf-8 -*-

"""
Bulk insert-or-replace through a temporary staging table.

Corpus runs write many rows at once and re-runs of a scenario must replace
the old rows atomically. Rows are bulk loaded into a clone of the target
table, conflicting target rows are deleted by a join against the clone, and
everything is copied over in one ``INSERT ... SELECT``.

Two transaction modes:

- **auto-managed** (``conn=None, trans=None``): the executor opens, commits
  or rolls back its own transaction
- **user-managed**: it runs inside the caller's transaction and leaves
  commit and rollback to the caller

In both modes a failure leaves no staging table behind.
"""

import typing as T
import dataclasses
import logging
from functools import cached_property

import sqlalchemy as sa

from ..exc import StoreTestError
from ..utils import get_utc_now

logger = logging.getLogger(__name__)


def get_pk_name(table: sa.Table) -> str:
    """
    :raises ValueError: unless the table has exactly one primary key column
    """
    pks = list(table.primary_key)
    if len(pks) != 1:  # pragma: no cover
        raise ValueError(
            f"Table must have exactly one primary key, but found: {[pk.name for pk in pks]}"
        )
    return pks[0].name


def get_temp_table_name(original_table_name: str) -> str:
    dt = get_utc_now().strftime("%Y%m%d%H%M%S%f")
    return f"temp_{dt}_{original_table_name}"


def clone_temp_table(
    original_table: sa.Table,
    metadata: sa.MetaData,
    temp_table_name: T.Optional[str] = None,
) -> sa.Table:
    """
    Copy the schema of ``original_table`` into ``metadata`` under a new name.
    Use a metadata separate from the target's so the clone can be dropped
    without touching it.
    """
    if temp_table_name is None:
        temp_table_name = get_temp_table_name(original_table.name)
    return original_table.to_metadata(metadata, name=temp_table_name)


@dataclasses.dataclass
class InsertOrReplaceExecutor:
    """
    One insert-or-replace run.

    :param engine: database engine
    :param table: target table, single column primary key
    :param values: rows to write, primary keys included
    :param metadata: metadata of the staging table
    :param temp_table_name: name of the staging table
    :param conn: caller's connection (user-managed mode)
    :param trans: caller's transaction (user-managed mode)
    :param _raise_on_temp_table_create: **Testing only**
    :param _raise_on_temp_data_insert: **Testing only**
    :param _raise_on_target_delete: **Testing only**
    :param _raise_on_target_insert: **Testing only**
    :param _raise_on_temp_table_drop: **Testing only**
    """

    engine: sa.Engine = dataclasses.field()
    table: sa.Table = dataclasses.field()
    values: T.List[T.Dict[str, T.Any]] = dataclasses.field()
    metadata: sa.MetaData = dataclasses.field()
    temp_table_name: str = dataclasses.field()
    conn: T.Optional[sa.Connection] = dataclasses.field(default=None)
    trans: T.Optional[sa.Transaction] = dataclasses.field(default=None)
    _raise_on_temp_table_create: bool = dataclasses.field(default=False)
    _raise_on_temp_data_insert: bool = dataclasses.field(default=False)
    _raise_on_target_delete: bool = dataclasses.field(default=False)
    _raise_on_target_insert: bool = dataclasses.field(default=False)
    _raise_on_temp_table_drop: bool = dataclasses.field(default=False)
    replaced_rows: int = dataclasses.field(default=0)
    inserted_rows: int = dataclasses.field(default=0)
    _temp_table: T.Optional[sa.Table] = dataclasses.field(default=None)
    _temp_table_created: bool = dataclasses.field(default=False)

    @classmethod
    def new(
        cls,
        engine: sa.Engine,
        table: sa.Table,
        values: T.List[T.Dict[str, T.Any]],
        metadata: T.Optional[sa.MetaData] = None,
        temp_table_name: T.Optional[str] = None,
        conn: T.Optional[sa.Connection] = None,
        trans: T.Optional[sa.Transaction] = None,
        **flags: bool,
    ):
        if metadata is None:
            metadata = sa.MetaData()
        if temp_table_name is None:
            temp_table_name = get_temp_table_name(table.name)
        return cls(
            engine=engine,
            table=table,
            values=values,
            metadata=metadata,
            temp_table_name=temp_table_name,
            conn=conn,
            trans=trans,
            **flags,
        )

    def __post_init__(self):
        if not (self.user_managed or self.auto_managed):
            raise ValueError(
                "Either both conn and trans must be provided (user-managed mode), "
                "or both must be None (auto-managed mode)"
            )

    @cached_property
    def user_managed(self) -> bool:
        return (self.conn is not None) and (self.trans is not None)

    @cached_property
    def auto_managed(self) -> bool:
        return (self.conn is None) and (self.trans is None)

    @cached_property
    def pk_name(self) -> str:
        return get_pk_name(self.table)

    def create_temp_table(self, conn: sa.Connection):
        if self._raise_on_temp_table_create:
            raise StoreTestError("error on temp table creation")
        self._temp_table.create(conn)
        self._temp_table_created = True

    def insert_temp_data(self, conn: sa.Connection):
        if self._raise_on_temp_data_insert:
            raise StoreTestError("error on temp data insertion")
        conn.execute(self._temp_table.insert(), self.values)

    def replace_target_rows(self, conn: sa.Connection):
        if self._raise_on_target_delete:
            raise StoreTestError("error on target deletion")
        pk = self.pk_name
        inner = sa.select(self.table.c[pk]).join(
            self._temp_table,
            self.table.c[pk] == self._temp_table.c[pk],
        )
        res = conn.execute(self.table.delete().where(self.table.c[pk].in_(inner)))
        self.replaced_rows = res.rowcount if res.rowcount is not None else 0

        if self._raise_on_target_insert:
            raise StoreTestError("error on target insertion")
        res = conn.execute(
            self.table.insert().from_select(
                list(self._temp_table.columns.keys()),
                sa.select(*list(self._temp_table.columns.values())),
            )
        )
        total = res.rowcount if res.rowcount is not None else len(self.values)
        self.inserted_rows = total - self.replaced_rows

    def drop_temp_table(self, conn: sa.Connection):
        if self._temp_table_created:
            if self._raise_on_temp_table_drop:
                raise StoreTestError("error on temp table cleanup")
            self._temp_table.drop(conn)
            self.metadata.remove(self._temp_table)
            self._temp_table_created = False

    def cleanup_temp_table_on_failure(self):
        """
        Drop the staging table on a fresh connection. SQLite DDL is not
        transactional, so the table can outlive a rolled back transaction.
        Errors here never mask the original one.
        """
        if not self._temp_table_created:
            return
        try:
            with self.engine.connect() as cleanup_conn:
                self._temp_table.drop(cleanup_conn)
                cleanup_conn.commit()
        except Exception:
            logger.debug("staging table %s already gone", self.temp_table_name)
        try:
            self.metadata.remove(self._temp_table)
        except Exception:  # pragma: no cover
            pass
        self._temp_table_created = False

    def execute_operation(self, conn: sa.Connection) -> T.Tuple[int, int]:
        self.create_temp_table(conn)
        self.insert_temp_data(conn)
        self.replace_target_rows(conn)
        self.drop_temp_table(conn)
        return self.replaced_rows, self.inserted_rows

    def run(self) -> T.Tuple[int, int]:
        """
        :return: ``(replaced_rows, inserted_rows)``
        """
        self._temp_table = clone_temp_table(
            self.table, self.metadata, self.temp_table_name
        )
        if self.user_managed:
            try:
                return self.execute_operation(self.conn)
            except Exception:
                self.cleanup_temp_table_on_failure()
                raise
        try:
            with self.engine.connect() as conn:
                with conn.begin():
                    return self.execute_operation(conn)
        except Exception:
            self.cleanup_temp_table_on_failure()
            raise


def insert_or_replace(
    engine: sa.Engine,
    table: sa.Table,
    values: T.List[T.Dict[str, T.Any]],
    metadata: T.Optional[sa.MetaData] = None,
    temp_table_name: T.Optional[str] = None,
    conn: T.Optional[sa.Connection] = None,
    trans: T.Optional[sa.Transaction] = None,
    _raise_on_temp_table_create: bool = False,
    _raise_on_temp_data_insert: bool = False,
    _raise_on_target_delete: bool = False,
    _raise_on_target_insert: bool = False,
    _raise_on_temp_table_drop: bool = False,
) -> T.Tuple[int, int]:
    """
    Write ``values`` into ``table``, replacing rows whose primary key is
    already there.

    :param conn: together with ``trans``, run inside the caller's transaction;
        both ``None`` runs in a transaction of its own

    :returns: ``(replaced_rows, inserted_rows)``

    :raises ValueError: when only one of ``conn`` and ``trans`` is given
    :raises StoreTestError: when a ``_raise_on_`` testing flag is set

    Example::

        with engine.connect() as conn:
            with conn.begin() as trans:
                replaced, inserted = insert_or_replace(
                    engine, t_corpus, rows, conn=conn, trans=trans
                )

    .. note::

        Parameters prefixed with ``_raise_on_`` exist for testing error
        handling only.
    """
    if not values:
        return 0, 0
    executor = InsertOrReplaceExecutor.new(
        engine=engine,
        table=table,
        values=values,
        metadata=metadata,
        temp_table_name=temp_table_name,
        conn=conn,
        trans=trans,
        _raise_on_temp_table_create=_raise_on_temp_table_create,
        _raise_on_temp_data_insert=_raise_on_temp_data_insert,
        _raise_on_target_delete=_raise_on_target_delete,
        _raise_on_target_insert=_raise_on_target_insert,
        _raise_on_temp_table_drop=_raise_on_temp_table_drop,
    )
    return executor.run()

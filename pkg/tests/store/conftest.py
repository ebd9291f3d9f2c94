# -*- coding: utf-8 -*-

import sys

import pytest
import sqlalchemy as sa

from online_thue_kit.paths import dir_tmp
from online_thue_kit.store.schema import Base
from online_thue_kit.tests.data import CorpusFaker

path_sqlite = dir_tmp / "test_store.sqlite"


@pytest.fixture(autouse=True)
def ensure_newline_before_test_output():
    sys.stdout.write("\n")
    sys.stdout.flush()


@pytest.fixture
def corpus_faker():
    return CorpusFaker(
        n_existing=4,
        n_input=3,
        n_conflict=2,
    )


@pytest.fixture
def clean_database(corpus_faker):
    """
    A fresh SQLite file holding the existing corpus rows.
    """
    dir_tmp.mkdir(parents=True, exist_ok=True)
    path_sqlite.unlink(missing_ok=True)
    engine = sa.create_engine(f"sqlite:///{path_sqlite}")
    Base.metadata.create_all(engine)
    corpus_faker.prepare_existing_data(engine)
    yield engine
    engine.dispose()


@pytest.fixture
def error_scenarios():
    return [
        ("_raise_on_temp_table_create", "temp_create_test"),
        ("_raise_on_temp_data_insert", "temp_data_test"),
        ("_raise_on_target_delete", "temp_delete_test"),
        ("_raise_on_target_insert", "temp_target_test"),
        ("_raise_on_temp_table_drop", "temp_drop_test"),
    ]

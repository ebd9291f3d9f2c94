# -*- coding: utf-8 -*-

from datetime import timezone

import pytest

from online_thue_kit.utils import (
    get_utc_now,
    normalize_edge,
    dumps_line,
    iter_records,
    resolve_seed,
)


def test_get_utc_now():
    now = get_utc_now()
    assert now.tzinfo == timezone.utc


def test_normalize_edge():
    assert normalize_edge(3, 1) == (1, 3)
    assert normalize_edge(1, 3) == (1, 3)
    with pytest.raises(ValueError):
        normalize_edge(2, 2)


def test_dumps_line():
    assert dumps_line({"v": 1, "attach": [1, 2]}) == '{"v":1,"attach":[1,2]}'
    # key order is kept
    assert dumps_line({"b": 1, "a": 2}) == '{"b":1,"a":2}'


def test_iter_records():
    text = '{"v":1}\n\n{"v":2}\n'
    assert list(iter_records(text)) == [{"v": 1}, {"v": 2}]
    with pytest.raises(ValueError):
        list(iter_records('{"v":1}\nnot json\n'))


def test_resolve_seed():
    assert resolve_seed(7) == 7
    seed = resolve_seed(None)
    assert 0 <= seed < 2**32


if __name__ == "__main__":
    from online_thue_kit.tests import run_cov_test

    run_cov_test(
        __file__,
        "online_thue_kit.utils",
        preview=False,
    )

# -*- coding: utf-8 -*-

import typing as T

from prettytable import PrettyTable


def pt_from_many_dict(
    data: T.Iterable[T.Dict[str, T.Any]],
) -> T.Optional[PrettyTable]:
    """
    Render rows of dictionaries (a store fetch, a corpus run) as a table;
    ``None`` when there are no rows.
    """
    iterator = iter(data)
    try:
        first_row = next(iterator)
    except StopIteration:
        return None
    if first_row is None:
        return None
    tb = PrettyTable()
    tb.field_names = list(first_row.keys())
    tb.add_row(list(first_row.values()))
    for row in iterator:
        tb.add_row(list(row.values()))
    return tb

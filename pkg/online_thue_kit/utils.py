# -*- coding: utf-8 -*-

import typing as T
import json
import secrets
import logging
from datetime import datetime, timezone

logger = logging.getLogger(__name__)

Edge = T.Tuple[int, int]


def get_utc_now() -> datetime:
    return datetime.now(tz=timezone.utc)


def normalize_edge(a: int, b: int) -> Edge:
    """
    Return the undirected edge ``{a, b}`` in ``(low, high)`` order.

    :raises ValueError: on a self-loop
    """
    if a == b:
        raise ValueError(f"self-loop on vertex {a}")
    return (a, b) if a < b else (b, a)


def dumps_line(record: T.Mapping[str, T.Any]) -> str:
    """
    Serialize one structured-text record the way every file of this package
    does: compact separators, key order as given. Two equal records always
    give byte-identical lines.
    """
    return json.dumps(record, separators=(",", ":"), ensure_ascii=True)


def iter_records(text: str) -> T.Iterator[dict]:
    """
    Parse a JSON-lines document, skipping blank lines.
    """
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            yield json.loads(line)
        except json.JSONDecodeError as e:
            raise ValueError(f"line {lineno}: not a JSON record: {e}") from e


def resolve_seed(seed: T.Optional[int]) -> int:
    """
    Return ``seed`` or, when it is omitted, a fresh 32-bit seed that is logged
    so the run can be reproduced.
    """
    if seed is None:
        seed = secrets.randbits(32)
        logger.info("no seed given, using %d", seed)
    return seed

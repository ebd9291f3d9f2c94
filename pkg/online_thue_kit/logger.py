# -*- coding: utf-8 -*-

"""
Logging setup for the command line surface.

Library modules only call ``logging.getLogger(__name__)``; handlers are
installed here, once, by the entry point.
"""

import typing as T
import logging

from rich.console import Console
from rich.logging import RichHandler

from .paths import PACKAGE_NAME

stderr_console = Console(stderr=True)


def setup_logging(
    level: int = logging.WARNING,
    console: T.Optional[Console] = None,
) -> logging.Logger:
    """
    Attach a :class:`rich.logging.RichHandler` to the package logger.

    Calling it again replaces the previous handler instead of stacking a
    second one.

    :param level: log level of the package logger
    :param console: where to render; defaults to standard error so the JSON
        output on standard out stays machine-readable
    """
    if console is None:
        console = stderr_console
    logger = logging.getLogger(PACKAGE_NAME)
    for handler in list(logger.handlers):
        if isinstance(handler, RichHandler):
            logger.removeHandler(handler)
    handler = RichHandler(
        console=console,
        show_path=False,
        rich_tracebacks=True,
    )
    handler.setFormatter(logging.Formatter("%(message)s"))
    logger.addHandler(handler)
    logger.setLevel(level)
    logger.propagate = False
    return logger

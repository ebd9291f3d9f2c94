# -*- coding: utf-8 -*-

import io
import logging

from rich.console import Console
from rich.logging import RichHandler

from online_thue_kit.logger import setup_logging


def test_setup_logging():
    buffer = io.StringIO()
    console = Console(file=buffer, width=120)
    logger = setup_logging(logging.INFO, console=console)
    setup_logging(logging.INFO, console=console)
    handlers = [h for h in logger.handlers if isinstance(h, RichHandler)]
    assert len(handlers) == 1
    assert logger.level == logging.INFO

    logging.getLogger("online_thue_kit.engine.session").info("session started")
    logging.getLogger("online_thue_kit.engine.session").debug("hidden")
    text = buffer.getvalue()
    assert "session started" in text
    assert "hidden" not in text

    setup_logging(logging.WARNING)


if __name__ == "__main__":
    from online_thue_kit.tests import run_cov_test

    run_cov_test(
        __file__,
        "online_thue_kit.logger",
        preview=False,
    )

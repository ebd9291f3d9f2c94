# -*- coding: utf-8 -*-

"""
Run one test file or folder from its own ``__main__`` block.
"""

import subprocess
from pathlib import Path

import pytest

from ..paths import dir_project_root, dir_htmlcov, path_cov_index_html


def run_unit_test(
    script: str,
):
    pytest.main(["-s", "--tb=native", f"--rootdir={dir_project_root}", script])


def run_cov_test(
    script: str,
    module: str,
    preview: bool = False,
    is_folder: bool = False,
):
    """
    Run ``script`` with coverage measured on ``module``.

    :param script: the test file (or a file inside the test folder)
    :param module: dotted module or package to measure
    :param preview: open the html report afterwards
    :param is_folder: run every test in the folder of ``script``
    """
    target = str(Path(script).parent) if is_folder else script
    pytest.main(
        [
            "-s",
            "--tb=native",
            f"--rootdir={dir_project_root}",
            f"--cov={module}",
            "--cov-report",
            "term-missing",
            "--cov-report",
            f"html:{dir_htmlcov}",
            target,
        ]
    )
    if preview:  # pragma: no cover
        subprocess.run(["open", f"{path_cov_index_html}"])

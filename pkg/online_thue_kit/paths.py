# -*- coding: utf-8 -*-

from pathlib import Path

dir_here = Path(__file__).absolute().parent
dir_package = dir_here
PACKAGE_NAME = dir_package.name

dir_project_root = dir_package.parent

# ------------------------------------------------------------------------------
# Test Related
# ------------------------------------------------------------------------------
dir_htmlcov = dir_project_root / "htmlcov"
path_cov_index_html = dir_htmlcov / "index.html"
dir_tmp = dir_project_root / "tmp"

# ------------------------------------------------------------------------------
# Artifact Related
# ------------------------------------------------------------------------------
# precomputed palettes, corpus output and the SQLite results store
dir_artifacts = dir_project_root / "artifacts"
path_results_sqlite = dir_artifacts / "results.sqlite"

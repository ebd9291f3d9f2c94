# -*- coding: utf-8 -*-
#
# Sphinx configuration for online_thue_kit.

from datetime import datetime

import online_thue_kit as package

package_name = package.__name__
package_author = package.__author__
package_version = package.__version__

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.intersphinx",
    "sphinx.ext.mathjax",
    "sphinx.ext.viewcode",
    "sphinx_copybutton",
]

templates_path = ["_templates"]
source_suffix = {
    ".rst": "restructuredtext",
}
master_doc = "index"

project = package_name
copyright = "{}, {}".format(datetime.utcnow().year, package_author)
author = package_author
version = package_version
release = package_version
language = "en"
exclude_patterns = []

pygments_style = "monokai"
pygments_dark_style = "monokai"
html_theme = "furo"
html_theme_options = {
    "sidebar_hide_name": False,
}
htmlhelp_basename = "{}doc".format(package_name)

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "networkx": ("https://networkx.org/documentation/stable/", None),
    "sqlalchemy": ("https://docs.sqlalchemy.org/en/20/", None),
}
autodoc_member_order = "bysource"

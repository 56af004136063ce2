# Configuration file for the Sphinx documentation builder.
#
# For the full list of options see
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Path setup --------------------------------------------------------------

import os
import sys

sys.path.insert(0, os.path.abspath("../.."))

import circumradii  # noqa: E402

# -- Project information -----------------------------------------------------

project = "circumradii"
copyright = "2026, circumradii developers"
author = "circumradii developers"

CURRENT_VERSION = f"v{circumradii.__version__}"
release = circumradii.__version__

# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.autosectionlabel",
    "sphinx.ext.duration",
    "myst_parser",
]

source_suffix = [".md"]

language = "en"

exclude_patterns = ["_build", "Thumbs.db", ".DS_Store", ".venv"]

# -- Options for HTML output -------------------------------------------------

html_theme = "sphinx_book_theme"
html_title = "circumradii"

html_theme_options = {
    "use_repository_button": False,
    "show_prev_next": False,
}

autodoc_default_options = {
    "member-order": "bysource",
    "inherited-members": False,
    "private-members": False,
}
autoclass_content = "class"

myst_enable_extensions = [
    "amsmath",
    "colon_fence",
    "deflist",
    "dollarmath",
]
myst_heading_anchors = 3

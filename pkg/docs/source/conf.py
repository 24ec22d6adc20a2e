# Sphinx configuration for the hyp-shtuka documentation.
import os
import sys

sys.path.insert(0, os.path.abspath(".." + os.sep + ".."))

from hypshtuka import __version__  # noqa

project = "hyp-shtuka"
copyright = "2026, The hyp-shtuka Authors"
author = "The hyp-shtuka Authors"
release = __version__

# m2r2 provides mdinclude for README.md and Usage.md
extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.viewcode",
    "m2r2",
]
autodoc_member_order = "bysource"

source_suffix = [".rst", ".md"]

html_theme = "sphinx_rtd_theme"

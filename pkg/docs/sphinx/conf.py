# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.

import os
import sys
sys.path.insert(0, os.path.abspath('./../../'))

# -- Project information -----------------------------------------------------

project = u'newtonforms-core'
copyright = u'2026, newtonforms developers'
author = u'newtonforms developers'

version = u'0.1.0'
release = u'0.1.0'

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.todo',
    'sphinx.ext.doctest',
    "sphinx_rtd_theme"
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
language = None
exclude_patterns = []
autodoc_mock_imports = ["metayaml"]
pygments_style = None

# -- Options for HTML output -------------------------------------------------

html_theme = "sphinx_rtd_theme"
htmlhelp_basename = 'newtonforms-core-doc'

# -- Options for LaTeX output ------------------------------------------------

latex_documents = [
    (master_doc, 'newtonforms-core.tex', u'newtonforms-core Documentation',
     u'newtonforms developers', 'manual'),
]

man_pages = [
    (master_doc, 'newtonforms-core', u'newtonforms-core Documentation',
     [author], 1)
]

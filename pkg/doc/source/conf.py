# Configuration file for the Sphinx documentation builder.

import os
import sys
sys.path.insert(0, os.path.abspath('../../'))

# -- Project information -----------------------------------------------------

project = 'PyTQD'
copyright = '2024, wqshen'
author = 'wqshen'
version = '0.1'
release = '0.1'

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
]

exclude_patterns = []
source_suffix = '.rst'
master_doc = 'index'

# -- Options for HTML output -------------------------------------------------

html_theme = 'pydata_sphinx_theme'
htmlhelp_basename = 'pytqddoc'

# -- Extension configuration -------------------------------------------------

autoclass_content = 'both'

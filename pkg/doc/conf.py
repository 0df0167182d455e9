#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# lqmatch documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
import sys
sys.path.insert(0, os.path.abspath('..'))

import lqmatch.version  # noqa: E402


# -- General configuration ------------------------------------------------

extensions = ['sphinx.ext.autodoc',
    'sphinx.ext.viewcode']

templates_path = ['_templates']

source_suffix = '.rst'

# The master toctree document.
master_doc = 'index'

# General information about the project.
project = 'lqmatch'
copyright = 'lqmatch contributors'
author = 'lqmatch contributors'

# The short X.Y version.
version = '%d.%d' % (lqmatch.version.MAJOR, lqmatch.version.MINOR)
# The full version, including alpha/beta/rc tags.
release = lqmatch.version.version

language = None

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

pygments_style = 'sphinx'

todo_include_todos = False

# Document __init__ parameters along with the class docstring.
autoclass_content = 'both'


# -- Options for HTML output ----------------------------------------------

html_theme = 'alabaster'

html_static_path = ['_static']

htmlhelp_basename = 'lqmatchdoc'


# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'lqmatch', 'lqmatch Documentation',
     [author], 1)
]

# -*- coding: utf-8 -*-
#
# gscat documentation build configuration file.

import os
import sys

sys.path.insert(0, os.path.abspath(os.path.join('..', 'src')))

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.todo',
    'sphinx.ext.coverage',
    'sphinx.ext.mathjax',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'gscat'
copyright = u'2026, gscat developers'
author = u'gscat developers'

version = u'0.1'
release = u'0.1.0'

language = None
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'tango'
todo_include_todos = True

html_theme = 'sphinx_rtd_theme'
html_theme_options = {
    'display_version': True,
}
htmlhelp_basename = 'gscatdoc'

latex_elements = {
    'papersize': 'letterpaper',
}
latex_documents = [
    (master_doc, 'gscat.tex', u'gscat Documentation', author, 'manual'),
]
man_pages = [
    (master_doc, 'gscat', u'gscat Documentation', [author], 1)
]

autoclass_content = 'both'

# -*- coding: utf-8 -*-
#
# hookpairs documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

# -- General configuration ------------------------------------------------

project = u'hookpairs'
copyright = u'2023, The hookpairs authors'
author = u'The hookpairs authors'

version = u'0.1.0'
release = u'0.1.0'

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
language = 'en'
exclude_patterns = [u'_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'

autodoc_member_order = 'bysource'

# -- Options for HTML output ----------------------------------------------

html_theme = 'alabaster'
html_static_path = ['_static']
htmlhelp_basename = 'hookpairsdoc'

# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'hookpairs', u'hookpairs Documentation',
     [author], 1)
]

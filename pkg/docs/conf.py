#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# mullineux documentation build configuration file
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os

# Insert the project root dir as the first element in the PYTHONPATH so
# that the source package is imported and its version is used.
cwd = os.getcwd()
project_root = os.path.dirname(cwd)
sys.path.insert(0, project_root)

import mullineux

# -- General configuration ---------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.viewcode']
templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'mullineux'
copyright = u'2017, The mullineux developers'

version = mullineux.__version__
release = mullineux.__version__

exclude_patterns = ['_build']
pygments_style = 'sphinx'


# -- Options for HTML output -------------------------------------------

html_theme = 'default'
html_static_path = ['_static']
htmlhelp_basename = 'mullineuxdoc'


# -- Options for LaTeX output ------------------------------------------

latex_elements = {}

latex_documents = [
    ('index', 'mullineux.tex',
     u'mullineux Documentation',
     u'The mullineux developers', 'manual'),
]


# -- Options for manual page output ------------------------------------

man_pages = [
    ('index', 'mullineux',
     u'mullineux Documentation',
     [u'The mullineux developers'], 1)
]


# -- Options for Texinfo output ----------------------------------------

texinfo_documents = [
    ('index', 'mullineux',
     u'mullineux Documentation',
     u'The mullineux developers',
     'mullineux',
     'Generalized Mullineux involution on Kleshchev multipartitions.',
     'Mathematics'),
]

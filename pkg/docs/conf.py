# Configuration file for the Sphinx documentation builder.
#
# This file only contains a selection of the most common options. For a full
# list see the documentation:
# http://www.sphinx-doc.org/en/master/config

import sphinx_material

# -- Project information -----------------------------------------------------

project = 'fairval'
copyright = '2022, The fairval Authors'
author = 'The fairval Authors'


# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx_material',
]

templates_path = ['_templates']

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']


# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_material'
html_theme_path = sphinx_material.html_theme_path()
html_context = sphinx_material.get_html_context()
html_theme_options = {
    'color_primary': 'blue',
    'color_accent': 'cyan',
    'nav_title': 'fairval: DCF and multiples valuation of DeFi tokens and firms',
    'version_dropdown': False,
}

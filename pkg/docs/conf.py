"""
Configuration file for rendering the documentation.

This folder contains the documentation source files that are rendered as
a static web site by Sphinx, triggered by `python tools/docs.py` or by
running `sphinx-build . output` in this folder. The start page is
`index.md`, which becomes `index.html` in the output folder.

Documents and doc-strings are written in Markdown and parsed by MyST.
The API pages pull in the doc-strings through Autodoc.
"""

from pathlib import Path
import sys

# Document the package in the source tree, not an installed version.
root = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(root))
from stann import meta


# Load Sphinx extensions.
extensions = [
    'myst_parser',                     # Markdown support
    'sphinx.ext.autodoc',              # API documentation from doc-strings
    'sphinx.ext.viewcode',             # additional [source] links
    'sphinx.ext.intersphinx',          # inter-project cross-references
]

# Meta information
project   = meta.title
author    = meta.author
copyright = meta.copyright
version   = meta.version
release   = version

# Web site
html_title = f'{project} {version}'    # document title

# Source parsing
root_doc = 'index'                     # start page
exclude_patterns = ['ReadMe.md']       # Ignore ReadMe in this folder here.
myst_enable_extensions = ['dollarmath']

# Code documentation
autodoc_default_options = {
    'members':       True,             # Include module/class members.
    'member-order': 'bysource',        # Order members as in source file.
}
add_module_names = False               # Drop module prefix from signatures.

# External link targets
intersphinx_mapping = {
    'python':   ('https://docs.python.org/3',          None),
    'sympy':    ('https://docs.sympy.org/latest',      None),
    'networkx': ('https://networkx.org/documentation/stable', None),
}

# Rendering options
myst_heading_anchors = 2               # Generate link anchors for sections.
html_copy_source     = False           # Copy documentation source files?
html_show_sphinx     = False           # Show Sphinx blurb in footer?

# Rendering style
html_theme          = 'furo'           # custom theme with light and dark mode
pygments_style      = 'friendly'       # syntax highlight style in light mode
pygments_dark_style = 'stata-dark'     # syntax highlight style in dark mode

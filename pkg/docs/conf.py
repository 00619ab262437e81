# -*- coding: utf-8 -*-
#
# Sphinx configuration for orderfinding.
import os
import sys
import inspect
import shutil

__location__ = os.path.join(os.getcwd(), os.path.dirname(
    inspect.getfile(inspect.currentframe())))

# Support markdown
sys.path.insert(0, os.path.join(__location__, '../src'))

# -- Run sphinx-apidoc ------------------------------------------------------
from sphinx.ext import apidoc  # noqa: E402

output_dir = os.path.join(__location__, "api")
module_dir = os.path.join(__location__, "../src/orderfinding")
try:
    shutil.rmtree(output_dir)
except FileNotFoundError:
    pass

try:
    apidoc.main(["-f", "-o", output_dir, module_dir])
except Exception as e:  # pylint:disable=broad-except
    print("Running `sphinx-apidoc` failed!\n{}".format(e))

# -- General configuration -----------------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.intersphinx', 'sphinx.ext.viewcode',
              'sphinx.ext.mathjax', 'sphinx.ext.napoleon', 'm2r']
templates_path = ['_templates']
source_suffix = ['.rst', '.md']
master_doc = 'index'

project = u'orderfinding'
copyright = u'2026, The orderfinding authors'

version = ''
release = ''
try:
    from orderfinding import __version__ as version
except ImportError:
    pass
else:
    release = version

exclude_patterns = ['_build']
pygments_style = 'sphinx'

# -- Options for HTML output ---------------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_static_path = []
htmlhelp_basename = 'orderfinding-doc'

# -- External mapping ------------------------------------------------------------
python_version = '.'.join(map(str, sys.version_info[0:2]))
intersphinx_mapping = {
    'python': ('https://docs.python.org/' + python_version, None),
    'numpy': ('https://numpy.org/doc/stable', None),
    'scipy': ('https://docs.scipy.org/doc/scipy', None),
}

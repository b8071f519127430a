# -*- coding: utf-8 -*-
#
# yangbaxter documentation build configuration file.

import sys, os

sys.path.insert(0, os.path.abspath('../../'))

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.doctest',
              'sphinx.ext.intersphinx']

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = u'yangbaxter'
copyright = u'2016, Yang-Baxter basis developers'

from yangbaxter.version import __version__
version = __version__.lstrip('v').rsplit('.', 1)[0]
release = __version__

exclude_patterns = []

pygments_style = 'sphinx'

html_theme = 'default'

html_static_path = ['_static']

htmlhelp_basename = 'yangbaxterdoc'

latex_documents = [
  ('index', 'yangbaxter.tex', u'yangbaxter Documentation',
   u'Yang-Baxter basis developers', 'manual'),
]

man_pages = [
    ('index', 'yangbaxter', u'yangbaxter Documentation',
     [u'Yang-Baxter basis developers'], 1)
]

intersphinx_mapping = {'python': ('https://docs.python.org/3', None)}

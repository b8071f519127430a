#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Copyright (c) 2016 Yang-Baxter basis developers

# Author(s):

#   Yang-Baxter basis developers

# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.

# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.


"""Setup yangbaxter
"""

from setuptools import setup

version = {}
with open('yangbaxter/version.py') as fd_:
    exec(fd_.read(), version)


requirements = ['numpy', 'sympy', 'trollsift']


setup(name="yangbaxter",
      version=version['__version__'],
      description='Yang-Baxter bases of Hecke algebras and Casselman tables',
      author='Yang-Baxter basis developers',
      packages=['yangbaxter', 'yangbaxter.tests'],
      scripts=['bin/yangbaxter'],
      data_files=[('etc', ['etc/yangbaxter.cfg'])],
      zip_safe=False,
      license="GPLv3",
      install_requires=requirements,
      classifiers=[
          'Development Status :: 4 - Beta',
          'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',
          'Programming Language :: Python :: 3',
          'Operating System :: OS Independent',
          'Intended Audience :: Science/Research',
          'Topic :: Scientific/Engineering :: Mathematics'
      ],
      test_suite='yangbaxter.tests.suite',
      tests_require=['mock', 'hypothesis']
      )

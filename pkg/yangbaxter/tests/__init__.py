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

"""The tests package.
"""

import unittest

from yangbaxter.tests import (test_casselman, test_cli, test_config,
                              test_hecke, test_kkalg, test_output,
                              test_rootdata, test_scalars, test_verify,
                              test_workers)


def suite():
    """The global test suite.
    """
    mysuite = unittest.TestSuite()
    mysuite.addTests(test_scalars.suite())
    mysuite.addTests(test_rootdata.suite())
    mysuite.addTests(test_workers.suite())
    mysuite.addTests(test_hecke.suite())
    mysuite.addTests(test_kkalg.suite())
    mysuite.addTests(test_casselman.suite())
    mysuite.addTests(test_verify.suite())
    mysuite.addTests(test_output.suite())
    mysuite.addTests(test_config.suite())
    mysuite.addTests(test_cli.suite())

    return mysuite

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


"""Test the worker threads.
"""

import unittest
from queue import Queue
from threading import Lock

from mock import MagicMock

from yangbaxter.workers import Worker, run_parallel


class TestRunParallel(unittest.TestCase):

    def test_order(self):
        for jobs in (1, 3, 20):
            self.assertEqual(run_parallel(lambda x: x * x, range(10), jobs),
                             [x * x for x in range(10)])

    def test_error(self):
        def function(item):
            if item == 5:
                raise ValueError("five")
            return item

        self.assertRaises(ValueError, run_parallel, function, range(8), 4)

    def test_empty(self):
        self.assertEqual(run_parallel(MagicMock(), [], 4), [])


class TestWorker(unittest.TestCase):

    def test_run(self):
        jobs = Queue()
        for position, item in enumerate("abc"):
            jobs.put((position, item))
        results = [None] * 3
        errors = []
        function = MagicMock(side_effect=str.upper)
        worker = Worker(function, jobs, results, errors, Lock())
        worker.start()
        worker.join()
        self.assertEqual(results, ["A", "B", "C"])
        self.assertEqual(errors, [])
        self.assertEqual(function.call_count, 3)

    def test_stop(self):
        jobs = Queue()
        jobs.put((0, 1))
        worker = Worker(MagicMock(), jobs, [None], [], Lock())
        worker.stop()
        worker.start()
        worker.join()
        self.assertEqual(jobs.qsize(), 1)


def suite():
    """The suite for test_workers
    """
    loader = unittest.TestLoader()
    mysuite = unittest.TestSuite()
    mysuite.addTest(loader.loadTestsFromTestCase(TestRunParallel))
    mysuite.addTest(loader.loadTestsFromTestCase(TestWorker))

    return mysuite

if __name__ == '__main__':
    unittest.main()

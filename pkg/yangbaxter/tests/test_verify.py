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


"""Test the identity suites.
"""

import unittest

from yangbaxter.rootdata import build_root_datum
from yangbaxter.verify import Check, VerificationReport, Verifier, run_all


class TestReport(unittest.TestCase):

    def test_failures(self):
        datum = build_root_datum("A", 1)
        report = VerificationReport(datum, [Check("one", "A1", True, "1"),
                                            Check("two", "A1", False, "2")])
        self.assertFalse(report.passed)
        self.assertEqual([check.name for check in report.failures], ["two"])
        self.assertEqual(report.lines()[1], "FAIL A1 two: 2")
        self.assertEqual(report.lines()[-1], "A1: 2 checks, 1 failed")
        self.assertFalse(report.to_dict()["passed"])


class TestSuites(unittest.TestCase):

    def test_yang_baxter_relations(self):
        for label, rank, name in (
                ("A", 2, "yang-baxter relation m=3 (s1, s2)"),
                ("B", 2, "yang-baxter relation m=4 (s1, s2)"),
                ("G", 2, "yang-baxter relation m=6 (s2, s1)"),
                ("A", 3, "yang-baxter relation m=2 (s1, s3)")):
            checks = Verifier(build_root_datum(label, rank)) \
                .check_yang_baxter_relations()
            self.assertIn(name, [check.name for check in checks])
            self.assertTrue(all(check.passed for check in checks))

    def test_rank_one_has_no_relations(self):
        verifier = Verifier(build_root_datum("A", 1))
        self.assertEqual(verifier.check_yang_baxter_relations(), [])

    def test_relations_g2(self):
        verifier = Verifier(build_root_datum("G", 2))
        for check in (verifier.check_quadratic_and_braid() +
                      verifier.check_dl_relations()):
            self.assertTrue(check.passed, check)

    def test_bruhat(self):
        verifier = Verifier(build_root_datum("B", 2))
        check, = verifier.check_bruhat()
        self.assertTrue(check.passed)
        self.assertEqual(check.detail, "64 checked")


class TestRunAll(unittest.TestCase):

    def test_a2(self):
        report = run_all(build_root_datum("A", 2))
        self.assertTrue(report.passed, report.lines())
        names = [check.name for check in report.checks]
        self.assertIn("duality", names)
        self.assertIn("phi(Delta_w) = Y_w", names)
        self.assertIn("sum identities for b", names)

    def test_deterministic(self):
        datum = build_root_datum("A", 1)
        self.assertEqual(run_all(datum, jobs=1).lines(),
                         run_all(datum, jobs=4).lines())

    def test_b2(self):
        report = run_all(build_root_datum("B", 2), jobs=2)
        self.assertTrue(report.passed, report.lines())

    def test_g2(self):
        report = run_all(build_root_datum("G", 2), jobs=2)
        self.assertTrue(report.passed, report.lines())
        names = [check.name for check in report.checks]
        self.assertIn("yang-baxter relation m=6 (s2, s1)", names)
        self.assertIn("classical demazure-lusztig relation", names)

    def test_a3_any_jobs(self):
        datum = build_root_datum("A", 3)
        serial = run_all(datum, jobs=1)
        self.assertTrue(serial.passed, serial.lines())
        self.assertEqual(serial.to_dict(), run_all(datum, jobs=4).to_dict())


def suite():
    """The suite for test_verify
    """
    loader = unittest.TestLoader()
    mysuite = unittest.TestSuite()
    mysuite.addTest(loader.loadTestsFromTestCase(TestReport))
    mysuite.addTest(loader.loadTestsFromTestCase(TestSuites))
    mysuite.addTest(loader.loadTestsFromTestCase(TestRunAll))

    return mysuite

if __name__ == '__main__':
    unittest.main()

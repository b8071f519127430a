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


"""Test the Casselman coefficients and the Whittaker sum.
"""

import unittest

from yangbaxter.casselman import ADMISSIBLE_CONE, Casselman, root_factor
from yangbaxter.hecke import HeckeAlgebra
from yangbaxter.rootdata import build_root_datum
from yangbaxter.scalars import (E, Scalar, evaluate_u, is_laurent_polynomial,
                                specialize_q)


def make(label, rank, jobs=1):
    return Casselman(HeckeAlgebra(build_root_datum(label, rank)), jobs)


class TestRankOne(unittest.TestCase):

    def setUp(self):
        self.casselman = make("A", 1)
        self.datum = self.casselman.datum
        self.s = self.datum.simple_reflection(0)
        self.u = Scalar.parameter(1, "u")

    def test_b(self):
        tables = self.casselman.casselman_tables()
        self.assertEqual(tables.b(self.datum.identity(), self.s),
                         (1 - self.u) / E((2, )))
        self.assertEqual(tables.a(self.datum.identity(), self.s),
                         -tables.b(self.datum.identity(), self.s))

    def test_m(self):
        m, mtilde = self.casselman.bn_m_coeffs(self.datum.identity(), self.s)
        self.assertEqual(m, root_factor(1, (2, )))
        self.assertEqual(mtilde, -root_factor(1, (2, )))
        self.assertEqual(self.casselman.s_sets(self.datum.identity(), self.s),
                         ([(2, )], [(2, )]))

    def test_numeric_q(self):
        m = self.casselman.bn_m_coeffs(self.datum.identity(), self.s)[0]
        self.assertEqual(evaluate_u(m, 1), 1)

    def test_not_below(self):
        self.assertRaises(ValueError, self.casselman.bn_m_coeffs, self.s,
                          self.datum.identity())

    def test_whittaker_oracle(self):
        value = self.casselman.whittaker_sum(self.datum.identity(), (0, ))
        self.assertEqual(value, -self.u * Scalar.monomial(1, (2, )))

    def test_whittaker_bad_weight(self):
        self.assertRaises(ValueError, self.casselman.whittaker_sum,
                          self.datum.identity(), (0, 1))

    def test_survey(self):
        survey = self.casselman.whittaker_cone_survey(bound=2)
        self.assertTrue(survey[ADMISSIBLE_CONE]["polynomial"])
        self.assertTrue(survey["antidominant"]["polynomial"])
        self.assertEqual(survey["dominant"]["checked"], 6)


class TestRankTwo(unittest.TestCase):

    def setUp(self):
        self.casselman = make("A", 2)
        self.datum = self.casselman.datum

    def test_specialized_tables(self):
        hecke_tables = self.casselman.hecke.transition_tables()
        tables = self.casselman.casselman_tables()
        for w, v in tables.pairs():
            self.assertEqual(tables.b(w, v), specialize_q(hecke_tables.p(w, v)))
            self.assertEqual(tables.a(w, v), self.casselman.closed_a(w, v))
            self.assertEqual(tables.b(w, v), self.casselman.closed_b(w, v))
            self.assertEqual(tables.b(w, v), self.casselman.reeder_b(w, v))

    def test_sum_identities(self):
        for v in self.datum.elements:
            lhs1, rhs1, lhs2, rhs2 = self.casselman.sum_identities(v)
            self.assertEqual(lhs1, rhs1)
            self.assertEqual(lhs2, rhs2)

    def test_s_sets(self):
        s1 = self.datum.simple_reflection(0)
        s1s2 = self.datum.elements[3]
        self.assertEqual(self.casselman.s_sets(s1, s1s2)[0], [(1, 1)])
        self.assertEqual(
            sorted(self.casselman.s_sets(self.datum.identity(), s1s2)[0]),
            sorted([(2, -1), (1, 1)]))

    def test_conjecture(self):
        report = self.casselman.conjecture_check()
        self.assertTrue(report.passed)
        self.assertTrue(report.simply_laced)
        self.assertTrue(report.entries)
        description = report.to_dict()
        self.assertEqual(description["failures"], 0)
        self.assertFalse(description["informational"])
        self.assertEqual(description["qualifying_pairs"], len(report.entries))

    def test_bridge(self):
        for check in self.casselman.bridge_check():
            self.assertEqual(check.violations, [])
        for w, v in self.casselman.casselman_tables().pairs():
            self.assertTrue(self.casselman.m_tilde_inverse_check(w, v))

    def test_whittaker_polynomial(self):
        for w in self.datum.elements:
            for mu in ((0, 0), (1, 0), (0, 1), (1, 1)):
                self.assertTrue(is_laurent_polynomial(
                    self.casselman.whittaker_sum(w, mu)))

    def test_whittaker_survey(self):
        survey = self.casselman.whittaker_cone_survey(bound=2)
        self.assertEqual(sorted(survey), ["antidominant", "dominant"])
        self.assertEqual(survey[ADMISSIBLE_CONE]["checked"], 6 * 9)
        self.assertTrue(survey[ADMISSIBLE_CONE]["polynomial"])
        self.assertEqual(survey[ADMISSIBLE_CONE]["failures"], [])

    def test_parallel(self):
        other = make("A", 2, jobs=3)
        self.assertEqual(other.casselman_tables().entries("a"),
                         self.casselman.casselman_tables().entries("a"))


class TestRankThree(unittest.TestCase):

    def test_conjecture(self):
        report = make("A", 3, jobs=2).conjecture_check()
        self.assertTrue(report.simply_laced)
        self.assertEqual(len(report.entries), 414)
        self.assertEqual(report.failures, [])
        for check in report.bridge:
            self.assertEqual(check.violations, [])
        self.assertTrue(report.passed)


class TestNonSimplyLaced(unittest.TestCase):

    def test_informational(self):
        report = make("B", 2).conjecture_check()
        self.assertFalse(report.simply_laced)
        self.assertTrue(report.to_dict()["informational"])
        for check in report.bridge:
            self.assertEqual(check.violations, [])


def suite():
    """The suite for test_casselman
    """
    loader = unittest.TestLoader()
    mysuite = unittest.TestSuite()
    mysuite.addTest(loader.loadTestsFromTestCase(TestRankOne))
    mysuite.addTest(loader.loadTestsFromTestCase(TestRankTwo))
    mysuite.addTest(loader.loadTestsFromTestCase(TestRankThree))
    mysuite.addTest(loader.loadTestsFromTestCase(TestNonSimplyLaced))

    return mysuite

if __name__ == '__main__':
    unittest.main()

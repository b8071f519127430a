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


"""Test the twisted group algebra and the map Phi.
"""

import unittest

from yangbaxter.hecke import HeckeAlgebra, root_scalars
from yangbaxter.kkalg import TwistedAlgebra, TwistedElt
from yangbaxter.rootdata import DatumMismatchError, build_root_datum
from yangbaxter.scalars import Scalar, weyl_act


def make(label, rank):
    hecke = HeckeAlgebra(build_root_datum(label, rank))
    return hecke, TwistedAlgebra(hecke)


class TestTwistedProduct(unittest.TestCase):

    def test_twist(self):
        hecke, twisted = make("A", 1)
        s = twisted.datum.simple_reflection(0)
        x = Scalar.monomial(1, (1, ))
        product = twisted.delta(s) * twisted.scalar(x)
        self.assertEqual(product.coefficient(s), weyl_act(s, x))
        self.assertEqual(x * twisted.delta(s),
                         TwistedElt(twisted.datum, {s: x}))

    def test_delta_along(self):
        hecke, twisted = make("A", 2)
        datum = twisted.datum
        self.assertEqual(twisted.delta_along([0]),
                         twisted.delta_element(datum.simple_reflection(0)))
        self.assertEqual(twisted.delta_along([0, 1]),
                         twisted.delta_element(datum.elements[3]))

    def test_mismatch(self):
        first = make("A", 1)[1]
        second = make("A", 2)[1]
        self.assertRaises(DatumMismatchError,
                          lambda: first.one() * second.one())
        self.assertRaises(DatumMismatchError, first.phi_iso, second.one())


class TestDemazureLusztig(unittest.TestCase):

    def test_quadratic(self):
        for label in ("A", "B", "G"):
            hecke, twisted = make(label, 2)
            for i in range(2):
                y = twisted.dl_generator(i)
                self.assertEqual(y * y, y * hecke.tsum - hecke.tprod)

    def test_braid(self):
        for label, m in (("A", 3), ("B", 4), ("G", 6)):
            twisted = make(label, 2)[1]
            left = [k % 2 for k in range(m)]
            right = [(k + 1) % 2 for k in range(m)]
            self.assertEqual(twisted.y_along(left), twisted.y_along(right))

    def test_specialized(self):
        twisted = make("A", 2)[1]
        u = Scalar.parameter(2, "u")
        for i in range(2):
            g = twisted.specialize_generator(i, t1=-u, t2=1)
            self.assertEqual(g * g, g * (1 - u) + u)

    def test_classical_form(self):
        twisted = make("B", 2)[1]
        datum = twisted.datum
        u = Scalar.parameter(2, "u")
        for i in range(2):
            root = Scalar.monomial(2, datum.simple_root(i))
            inverse = Scalar.monomial(2, [-k for k in datum.simple_root(i)])
            g = twisted.specialize_generator(i, t1=-1, t2=u)
            self.assertEqual(g.coefficient(datum.simple_reflection(i)),
                             (-1 + u * inverse) / (1 - root))
            self.assertEqual(g.coefficient(datum.identity()),
                             (u - 1) / (1 - inverse))
            self.assertEqual((g + 1) * (g - u), TwistedElt(datum))

    def test_leading_coefficient(self):
        twisted = make("B", 2)[1]
        datum = twisted.datum
        for w, coords in twisted.y_basis_matrix().items():
            self.assertEqual(coords[w], twisted.a_factor(w))
            self.assertTrue(all(datum.bruhat_leq(u, w) for u in coords))
            self.assertEqual(twisted.a_factor(w) * twisted.a_inverse(w), 1)


class TestPhi(unittest.TestCase):

    def test_delta_to_yang_baxter(self):
        for label in ("A", "B"):
            hecke, twisted = make(label, 2)
            for w in twisted.datum.elements:
                self.assertEqual(twisted.phi_iso(twisted.delta_element(w)),
                                 hecke.yang_baxter_basis(w))

    def test_y_to_h(self):
        hecke, twisted = make("A", 2)
        for w in twisted.datum.elements:
            self.assertEqual(twisted.phi_iso(twisted.y_word(w)),
                             hecke.basis(w))


class TestClosedFormula(unittest.TestCase):

    def test_example_one(self):
        hecke, twisted = make("A", 2)
        datum = twisted.datum
        b2 = root_scalars(2, (-1, 2))[1]
        b12 = root_scalars(2, (1, 1))[1]
        self.assertEqual(twisted.ptilde_closed(datum.simple_reflection(0),
                                               datum.longest_element()),
                         b2 * b12)

    def test_against_tables(self):
        for label in ("A", "B"):
            hecke, twisted = make(label, 2)
            tables = hecke.transition_tables()
            for w, v in tables.pairs():
                self.assertEqual(twisted.ptilde_closed(w, v),
                                 tables.ptilde(w, v))
                self.assertEqual(twisted.p_closed_via_duality(w, v),
                                 tables.p(w, v))

    def test_p_closed(self):
        hecke, twisted = make("A", 2)
        tables = hecke.transition_tables()
        longest = twisted.datum.longest_element()
        for w in twisted.datum.elements:
            self.assertEqual(twisted.p_closed(w, longest),
                             tables.p(w, longest))

    def test_not_below(self):
        twisted = make("A", 2)[1]
        datum = twisted.datum
        self.assertFalse(twisted.ptilde_closed(datum.simple_reflection(1),
                                               datum.simple_reflection(0)))


def suite():
    """The suite for test_kkalg
    """
    loader = unittest.TestLoader()
    mysuite = unittest.TestSuite()
    mysuite.addTest(loader.loadTestsFromTestCase(TestTwistedProduct))
    mysuite.addTest(loader.loadTestsFromTestCase(TestDemazureLusztig))
    mysuite.addTest(loader.loadTestsFromTestCase(TestPhi))
    mysuite.addTest(loader.loadTestsFromTestCase(TestClosedFormula))

    return mysuite

if __name__ == '__main__':
    unittest.main()

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


"""Test the serializers.
"""

import json
import os
import shutil
import tempfile
import unittest

from io import StringIO

from yangbaxter.casselman import Casselman
from yangbaxter.hecke import HeckeAlgebra
from yangbaxter.output import (SCHEMA, output_filename, render_datum,
                               render_report, render_tables, render_value,
                               to_json, write)
from yangbaxter.rootdata import build_root_datum
from yangbaxter.verify import Check, VerificationReport


class TestJson(unittest.TestCase):

    def test_schema(self):
        document = json.loads(to_json({"datum": "A1"}))
        self.assertEqual(document["schema"], SCHEMA)
        self.assertEqual(document["datum"], "A1")

    def test_sorted(self):
        self.assertEqual(to_json({"b": 1, "a": 2}),
                         to_json({"a": 2, "b": 1}))
        self.assertTrue(to_json({}).endswith("\n"))


class TestTables(unittest.TestCase):

    def setUp(self):
        self.datum = build_root_datum("A", 1)
        hecke = HeckeAlgebra(self.datum)
        self.tables = hecke.transition_tables()
        self.casselman = Casselman(hecke).casselman_tables()

    def test_json(self):
        text = render_tables(self.datum,
                             {"p": self.tables.entries("p"),
                              "ptilde": self.tables.entries("ptilde")})
        document = json.loads(text)
        self.assertEqual(sorted(document["tables"]), ["p", "ptilde"])
        self.assertEqual(sorted(document["tables"]["p"]),
                         ["e|e", "e|s1", "s1|s1"])
        self.assertEqual(document["tables"]["p"]["e|e"], "1")
        self.assertEqual(document["datum"], "A1")

    def test_latex(self):
        text = render_tables(self.datum, {"b": self.casselman.entries("b")},
                             "latex")
        self.assertTrue(text.startswith("\\begin{tabular}{lll}"))
        self.assertIn("\\frac", text)
        self.assertIn("$s_{1}$", text)
        self.assertIn("\\end{tabular}", text)

    def test_text(self):
        text = render_tables(self.datum, {"a": self.casselman.entries("a")},
                             "text")
        lines = text.splitlines()
        self.assertEqual(lines[0], "A1 a(w,v)")
        self.assertEqual(len(lines), 5)
        self.assertIn(" | ", lines[1])

    def test_unknown_format(self):
        self.assertRaises(ValueError, render_tables, self.datum,
                          {"p": self.tables.entries("p")}, "xml")


class TestReportsAndValues(unittest.TestCase):

    def setUp(self):
        self.datum = build_root_datum("A", 1)
        self.report = VerificationReport(
            self.datum, [Check("duality", "A1", True, "3 checked")])

    def test_report(self):
        document = json.loads(render_report(self.report))
        self.assertTrue(document["passed"])
        self.assertEqual(render_report(self.report, "text"),
                         "PASS A1 duality: 3 checked\n"
                         "A1: 1 checks, 0 failed\n")
        self.assertIn("duality", render_report(self.report, "latex"))

    def test_value(self):
        value = Casselman(HeckeAlgebra(self.datum)).whittaker_sum(
            self.datum.identity(), (0, ))
        document = json.loads(render_value({"command": "whittaker"}, value))
        self.assertEqual(document["value"], str(value))
        self.assertEqual(document["command"], "whittaker")
        self.assertTrue(render_value({}, value, "latex").startswith("$"))

    def test_datum(self):
        document = json.loads(render_datum(self.datum))
        self.assertEqual(document["order"], 2)
        self.assertEqual(document["positive_roots"][0]["weight"], [2])
        self.assertTrue(render_datum(self.datum, "text").startswith(
            "A1: |W| = 2, |R+| = 1"))


class TestWrite(unittest.TestCase):

    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def test_filename(self):
        datum = build_root_datum("A", 2)
        self.assertEqual(output_filename("{command}_{type}{rank}.{format}",
                                         "table", datum, "json"),
                         "table_A2.json")

    def test_stream(self):
        stream = StringIO()
        self.assertIsNone(write("abc\n", stream=stream))
        self.assertEqual(stream.getvalue(), "abc\n")

    def test_file(self):
        datum = build_root_datum("B", 2)
        pattern = os.path.join(self.directory, "{command}_{type}{rank}.txt")
        filename = write("abc\n", pattern, "verify", datum, "text")
        self.assertEqual(os.path.basename(filename), "verify_B2.txt")
        with open(filename) as fd_:
            self.assertEqual(fd_.read(), "abc\n")


def suite():
    """The suite for test_output
    """
    loader = unittest.TestLoader()
    mysuite = unittest.TestSuite()
    mysuite.addTest(loader.loadTestsFromTestCase(TestJson))
    mysuite.addTest(loader.loadTestsFromTestCase(TestTables))
    mysuite.addTest(loader.loadTestsFromTestCase(TestReportsAndValues))
    mysuite.addTest(loader.loadTestsFromTestCase(TestWrite))

    return mysuite

if __name__ == '__main__':
    unittest.main()

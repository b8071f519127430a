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

"""Identity suites run by the verify command.

Every suite returns a list of Check tuples and never raises on a failing
identity.
"""

import logging
from collections import namedtuple

from yangbaxter.casselman import Casselman
from yangbaxter.hecke import HeckeAlgebra, HeckeElt
from yangbaxter.kkalg import TwistedAlgebra
from yangbaxter.rootdata import subword_leq
from yangbaxter.scalars import Scalar
from yangbaxter.workers import run_parallel

logger = logging.getLogger(__name__)

Check = namedtuple("Check", ["name", "datum", "passed", "detail"])

# (letter, p, q): letter 0 is i, 1 is j, the weight is p lambda + q nu.
# For m = 4 and 6, i is the long simple root.
YANG_BAXTER_RELATIONS = {
    2: ([(0, 1, 0), (1, 0, 1)],
        [(1, 0, 1), (0, 1, 0)]),
    3: ([(0, 1, 0), (1, 1, 1), (0, 0, 1)],
        [(1, 0, 1), (0, 1, 1), (1, 1, 0)]),
    4: ([(0, 1, 0), (1, 1, 1), (0, 1, 2), (1, 0, 1)],
        [(1, 0, 1), (0, 1, 2), (1, 1, 1), (0, 1, 0)]),
    6: ([(0, 1, 0), (1, 1, 1), (0, 2, 3), (1, 1, 2), (0, 1, 3), (1, 0, 1)],
        [(1, 0, 1), (0, 1, 3), (1, 1, 2), (0, 2, 3), (1, 1, 1), (0, 1, 0)]),
}

MAX_LISTED = 5


def _detail(checked, violations):
    if not violations:
        return "%d checked" % checked
    listed = ", ".join("(" + ", ".join(str(x) for x in item) + ")"
                       if isinstance(item, tuple) else str(item)
                       for item in violations[:MAX_LISTED])
    return "%d of %d violated: %s" % (len(violations), checked, listed)


class VerificationReport(object):

    """The ordered checks of one verify run.
    """

    def __init__(self, datum, checks=None):
        self.datum = datum
        self.checks = list(checks or [])

    def extend(self, checks):
        self.checks.extend(checks)

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    @property
    def failures(self):
        return [check for check in self.checks if not check.passed]

    def to_dict(self):
        return {"datum": self.datum.name,
                "passed": self.passed,
                "checks": [{"name": check.name, "passed": check.passed,
                            "detail": check.detail}
                           for check in self.checks]}

    def lines(self):
        lines = ["%s %s %s: %s" % ("PASS" if check.passed else "FAIL",
                                   check.datum, check.name, check.detail)
                 for check in self.checks]
        lines.append("%s: %d checks, %d failed" % (self.datum.name,
                                                   len(self.checks),
                                                   len(self.failures)))
        return lines


class Verifier(object):

    """Run the identity suites against one root datum.
    """

    def __init__(self, datum, jobs=1):
        self.datum = datum
        self.jobs = jobs
        self.hecke = HeckeAlgebra(datum)
        self.twisted = TwistedAlgebra(self.hecke)
        self.casselman = Casselman(self.hecke, jobs)

    @property
    def rank(self):
        return self.datum.rank

    def _make(self, name, checked, violations):
        check = Check(name, self.datum.name, not violations,
                      _detail(checked, violations))
        if check.passed:
            logger.info("%s %s: %s", self.datum.name, name, check.detail)
        else:
            logger.warning("%s %s: %s", self.datum.name, name, check.detail)
        return check

    def _from_identity(self, identity):
        return self._make(identity.name, identity.checked,
                          identity.violations)

    def _pairs(self):
        return self.hecke.transition_tables(self.jobs).pairs()

    def _scan(self, name, items, predicate):
        """Check *predicate* on every item, in parallel.
        """
        outcomes = run_parallel(predicate, items, self.jobs)
        violations = [item for item, ok in zip(items, outcomes) if not ok]
        return self._make(name, len(items), violations)

    def check_bruhat(self):
        datum = self.datum
        pairs = [(u, v) for v in datum.elements for u in datum.elements]
        return [self._scan("bruhat order against subwords", pairs,
                           lambda pair: (datum.bruhat_leq(*pair) ==
                                         subword_leq(*pair)))]

    def _generator_pairs(self):
        datum = self.datum
        for a in range(datum.rank):
            for b in range(a + 1, datum.rank):
                m = datum.coxeter_number(a, b)
                if m in (4, 6) and datum.cartan[b, a] > -2:
                    yield b, a, m
                else:
                    yield a, b, m

    def check_quadratic_and_braid(self):
        hecke = self.hecke
        quadratic = []
        for i in range(self.datum.rank):
            h = hecke.generator(i)
            if h * h != h * hecke.tsum - hecke.scalar(hecke.tprod):
                quadratic.append("s%d" % (i + 1))
        checks = [self._make("hecke quadratic relation", self.datum.rank,
                             quadratic)]
        braid = []
        count = 0
        for i, j, m in self._generator_pairs():
            count += 1
            left = [(i, j)[k % 2] for k in range(m)]
            right = [(j, i)[k % 2] for k in range(m)]
            if _word_product(hecke, left) != _word_product(hecke, right):
                braid.append("s%ds%d" % (i + 1, j + 1))
        checks.append(self._make("hecke braid relations", count, braid))
        return checks

    def check_yang_baxter_relations(self):
        """h_i(lambda) h_j(lambda + nu) ... with fresh weights lambda, nu.
        """
        rank = self.datum.rank
        if rank < 2:
            return []
        lam = tuple(int(k == 0) for k in range(rank))
        nu = tuple(int(k == 1) for k in range(rank))
        checks = []
        for i, j, m in self._generator_pairs():
            sides = []
            for side in YANG_BAXTER_RELATIONS[m]:
                product = self.hecke.one()
                for letter, p, q in side:
                    weight = tuple(p * a + q * b for a, b in zip(lam, nu))
                    product = product * self.hecke.yb_factor((i, j)[letter],
                                                             weight)
                sides.append(product)
            name = "yang-baxter relation m=%d (s%d, s%d)" % (m, i + 1, j + 1)
            checks.append(self._make(name, 1, [] if sides[0] == sides[1]
                                     else [name]))
        return checks

    def check_dl_relations(self):
        twisted = self.twisted
        rank = self.rank
        u = Scalar.parameter(rank, "u")
        tsum, tprod = self.hecke.tsum, self.hecke.tprod
        quadratic = []
        specialized = []
        classical = []
        for i in range(self.datum.rank):
            y = twisted.dl_generator(i)
            if y * y != y * tsum - tprod:
                quadratic.append("s%d" % (i + 1))
            g = twisted.specialize_generator(i, t1=-u, t2=1)
            if g * g != g * (1 - u) + u:
                specialized.append("s%d" % (i + 1))
            g = twisted.specialize_generator(i, t1=-1, t2=u)
            if (g + 1) * (g - u):
                classical.append("s%d" % (i + 1))
        braid = []
        count = 0
        for i, j, m in self._generator_pairs():
            count += 1
            left = [(i, j)[k % 2] for k in range(m)]
            right = [(j, i)[k % 2] for k in range(m)]
            if twisted.y_along(left) != twisted.y_along(right):
                braid.append("s%ds%d" % (i + 1, j + 1))
        return [self._make("demazure-lusztig quadratic relation", rank,
                           quadratic),
                self._make("demazure-lusztig braid relations", count, braid),
                self._make("specialized demazure-lusztig relation", rank,
                           specialized),
                self._make("classical demazure-lusztig relation", rank,
                           classical)]

    def check_orthogonality(self):
        datum = self.datum
        hecke = self.hecke
        longest = datum.longest_element()
        elements = datum.elements

        def standard_row(v):
            return [w for w in elements
                    if hecke.inner_product(
                        hecke.basis(v),
                        hecke.hat_elt(hecke.basis(longest * w))) != int(v == w)]

        def yang_baxter_row(v):
            return [w for w in elements
                    if hecke.inner_product(
                        hecke.yang_baxter_basis(v),
                        hecke.act_coefficients(
                            longest, hecke.yang_baxter_basis(longest * w)))
                    != int(v == w)]

        def adjoint_row(x):
            bad = []
            for y in elements:
                for i in range(self.rank):
                    left = hecke.inner_product(
                        hecke.basis(x).times_generator(i), hecke.basis(y))
                    right = hecke.inner_product(
                        hecke.basis(x), hecke.basis(y).times_generator(i))
                    if left != right:
                        bad.append((x, y, "s%d" % (i + 1)))
            return bad

        checks = []
        for name, row in (("standard orthogonality", standard_row),
                          ("yang-baxter orthogonality", yang_baxter_row)):
            rows = run_parallel(row, elements, self.jobs)
            violations = [(v, w) for v, bad in zip(elements, rows)
                          for w in bad]
            checks.append(self._make(name, len(elements) ** 2, violations))
        rows = run_parallel(adjoint_row, elements, self.jobs)
        checks.append(self._make("adjointness of h_s",
                                 len(elements) ** 2 * self.rank,
                                 [item for bad in rows for item in bad]))
        return checks

    def check_duality(self):
        hecke = self.hecke
        tables = hecke.transition_tables(self.jobs)

        def basis_property(v):
            total = HeckeElt(self.datum)
            for w in self.datum.bruhat_interval(self.datum.identity(), v):
                value = tables.ptilde(w, v)
                if value:
                    total = total + hecke.yang_baxter_basis(w) * value
            return total == hecke.basis(v)

        return [self._from_identity(hecke.duality_check()),
                self._scan("basis property", self.datum.elements,
                           basis_property)]

    def check_omega_symmetry(self):
        hecke = self.hecke
        longest = self.datum.longest_element()

        def conjugation(v):
            left = hecke.omega(hecke.yang_baxter_basis(longest * v * longest))
            right = hecke.star_coefficients(
                hecke.act_coefficients(longest, hecke.yang_baxter_basis(v)))
            return left == right

        return [self._scan("omega symmetry of Y", self.datum.elements,
                           conjugation),
                self._from_identity(hecke.omega_conjugation_check())]

    def check_hat_expansion(self):
        hecke = self.hecke
        hecke.transition_tables(self.jobs)
        return [self._scan("hat expansion", self.datum.elements,
                           lambda v: (hecke.hat_expansion(v) ==
                                      hecke.yang_baxter_basis(v)))]

    def check_phi_isomorphism(self):
        twisted = self.twisted
        hecke = self.hecke
        return [self._scan("phi(Delta_w) = Y_w", self.datum.elements,
                           lambda w: (twisted.phi_iso(twisted.delta_element(w))
                                      == hecke.yang_baxter_basis(w)))]

    def check_closed_formula(self):
        tables = self.hecke.transition_tables(self.jobs)
        twisted = self.twisted
        pairs = self._pairs()
        return [self._scan("closed formula for ptilde", pairs,
                           lambda pair: (twisted.ptilde_closed(*pair) ==
                                         tables.ptilde(*pair))),
                self._scan("closed formula for p via duality", pairs,
                           lambda pair: (twisted.p_closed_via_duality(*pair)
                                         == tables.p(*pair)))]

    def check_recurrences(self):
        hecke = self.hecke
        tables = hecke.transition_tables(self.jobs)
        casselman = self.casselman
        specialized = casselman.casselman_tables()
        pairs = self._pairs()
        checks = []
        for side in ("left", "right"):
            checks.append(self._scan(
                "%s recurrence for p" % side, pairs,
                lambda pair, side=side: (hecke.recurrence_p(*pair, side=side)
                                         == tables.p(*pair))))
            checks.append(self._scan(
                "%s recurrence for ptilde" % side, pairs,
                lambda pair, side=side: (
                    hecke.recurrence_ptilde(*pair, side=side) ==
                    tables.ptilde(*pair))))
        checks.append(self._scan(
            "specialized recurrence for b", pairs,
            lambda pair: casselman.reeder_b(*pair) == specialized.b(*pair)))
        return checks

    def check_sum_identities(self):
        casselman = self.casselman
        casselman.casselman_tables()

        def identities(v):
            lhs1, rhs1, lhs2, rhs2 = casselman.sum_identities(v)
            return lhs1 == rhs1 and lhs2 == rhs2

        return [self._scan("sum identities for b", self.datum.elements,
                           identities)]

    def check_bridge(self):
        casselman = self.casselman
        checks = [self._from_identity(check)
                  for check in casselman.bridge_check()]
        checks.append(self._scan(
            "mtilde inverts m", self._pairs(),
            lambda pair: casselman.m_tilde_inverse_check(*pair)))
        return checks

    def suites(self):
        return [self.check_bruhat,
                self.check_quadratic_and_braid,
                self.check_yang_baxter_relations,
                self.check_dl_relations,
                self.check_orthogonality,
                self.check_duality,
                self.check_omega_symmetry,
                self.check_hat_expansion,
                self.check_phi_isomorphism,
                self.check_closed_formula,
                self.check_recurrences,
                self.check_sum_identities,
                self.check_bridge]

    def run_all(self):
        report = VerificationReport(self.datum)
        for suite in self.suites():
            logger.debug("Running %s on %s", suite.__name__, self.datum.name)
            report.extend(suite())
        return report


def _word_product(hecke, word):
    result = hecke.one()
    for letter in word:
        result = result.times_generator(letter)
    return result


def run_all(datum, jobs=1):
    """Every suite on *datum*, in a fixed order.
    """
    return Verifier(datum, jobs).run_all()


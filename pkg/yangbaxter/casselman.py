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

"""Casselman coefficients at t1 = -q^-1, t2 = 1.

u stands for q^-1 throughout. a = ptilde and b = p after specialization;
m and mtilde are the interval sums comparing psi_w = sum_{v >= w} phi_v
with the Casselman basis.
"""

import itertools
import logging
from collections import namedtuple
from threading import Lock

from yangbaxter.hecke import IdentityCheck, TransitionPair
from yangbaxter.kkalg import TwistedAlgebra
from yangbaxter.scalars import (E, Scalar, is_laurent_polynomial,
                                specialize_q, weyl_act)
from yangbaxter.workers import run_parallel

logger = logging.getLogger(__name__)

ADMISSIBLE_CONE = "dominant"

ConjectureEntry = namedtuple("ConjectureEntry",
                             ["kind", "w", "v", "size", "length_difference",
                              "lhs", "rhs", "passed"])


class CasselmanTables(object):

    """The specialized tables a(w, v) and b(w, v).
    """

    def __init__(self, datum, a, b):
        self.datum = datum
        self.A = a
        self.B = b

    def a(self, w, v):
        return self.A.get((w, v), Scalar.zero(self.datum.rank))

    def b(self, w, v):
        return self.B.get((w, v), Scalar.zero(self.datum.rank))

    def pairs(self):
        datum = self.datum
        return [TransitionPair(w, v) for v in datum.elements
                for w in datum.elements[:v.index + 1]
                if datum.bruhat_leq(w, v)]

    def entries(self, kind="a"):
        table = self.A if kind == "a" else self.B
        return [(pair, table[pair]) for pair in self.pairs()
                if pair in table]


class ConjectureReport(object):

    """Outcome of the factorization scan over all comparable pairs.
    """

    def __init__(self, datum, entries, bridge):
        self.datum = datum
        self.entries = entries
        self.bridge = bridge

    @property
    def simply_laced(self):
        return self.datum.is_simply_laced()

    @property
    def failures(self):
        return [entry for entry in self.entries if not entry.passed]

    @property
    def passed(self):
        return (not self.failures and
                all(not check.violations for check in self.bridge))

    def to_dict(self):
        return {"datum": self.datum.name,
                "simply_laced": self.simply_laced,
                "informational": not self.simply_laced,
                "qualifying_pairs": len(self.entries),
                "failures": len(self.failures),
                "bridge": [{"name": check.name, "checked": check.checked,
                            "violations": len(check.violations)}
                           for check in self.bridge],
                "pairs": [{"kind": entry.kind,
                           "w": str(entry.w),
                           "v": str(entry.v),
                           "|S|": entry.size,
                           "l-difference": entry.length_difference,
                           "lhs": str(entry.lhs),
                           "rhs": str(entry.rhs),
                           "pass": entry.passed}
                          for entry in self.entries]}


def root_factor(rank, root):
    """(1 - u e^root) / (1 - e^root).
    """
    u = Scalar.parameter(rank, "u")
    monomial = Scalar.monomial(rank, root)
    return (1 - u * monomial) / (1 - monomial)


class Casselman(object):

    """Casselman's problem on top of a Hecke algebra.
    """

    def __init__(self, hecke, jobs=1):
        self.hecke = hecke
        self.datum = hecke.datum
        self.rank = hecke.rank
        self.jobs = jobs
        self._lock = Lock()
        self._tables = None
        self._twisted = None
        self._reeder = {}
        self._whittaker_products = {}

    @property
    def twisted(self):
        if self._twisted is None:
            self._twisted = TwistedAlgebra(self.hecke)
        return self._twisted

    @property
    def u(self):
        return Scalar.parameter(self.rank, "u")

    def casselman_tables(self):
        """Specialize both transition tables entrywise.
        """
        if self._tables is not None:
            return self._tables
        tables = self.hecke.transition_tables(self.jobs)
        pairs = tables.pairs()
        b_values = run_parallel(lambda pair: specialize_q(tables.p(*pair)),
                                pairs, self.jobs)
        a_values = run_parallel(
            lambda pair: specialize_q(tables.ptilde(*pair)), pairs, self.jobs)
        a = dict((pair, value) for pair, value in zip(pairs, a_values)
                 if value)
        b = dict((pair, value) for pair, value in zip(pairs, b_values)
                 if value)
        logger.debug("Specialized %d entries for %s", len(pairs),
                     self.datum.name)
        self._tables = CasselmanTables(self.datum, a, b)
        return self._tables

    def closed_a(self, w, v):
        """a(w, v) from the subword formula.
        """
        return specialize_q(self.twisted.ptilde_closed(w, v))

    def closed_b(self, w, v):
        """b(w, v) from the subword formula and duality.
        """
        return specialize_q(self.twisted.p_closed_via_duality(w, v))

    def reeder_b(self, w, v):
        """b(w, v) from the specialized left recurrence alone.
        """
        datum = self.datum
        if v.is_identity():
            return Scalar.constant(self.rank, int(w.is_identity()))
        if not datum.bruhat_leq(w, v):
            return Scalar.zero(self.rank)
        key = (w.index, v.index)
        with self._lock:
            if key in self._reeder:
                return self._reeder[key]
        letter = v.word[0]
        rest = datum.left_multiply(letter, v)
        other = datum.left_multiply(letter, w)
        s = datum.simple_reflection(letter)
        u = self.u
        coeff = (1 - u) / E(datum.simple_root(letter))
        first = weyl_act(s, self.reeder_b(w, rest))
        second = weyl_act(s, self.reeder_b(other, rest))
        if other.length > w.length:
            value = coeff * first + u * second
        else:
            value = (coeff + 1 - u) * first + second
        with self._lock:
            self._reeder[key] = value
        return value

    def sum_identities(self, v):
        """Both sums over b(., v) next to their products over R(v).

        sum_w b(w, v) = prod (1 - u e^beta) / (1 - e^beta) and
        sum_w b(w, v) (-u)^l(w) = prod (e^beta - u) / (1 - e^beta).
        """
        tables = self.casselman_tables()
        u = self.u
        lhs1 = Scalar.zero(self.rank)
        lhs2 = Scalar.zero(self.rank)
        for w in self.datum.bruhat_interval(self.datum.identity(), v):
            value = tables.b(w, v)
            lhs1 = lhs1 + value
            lhs2 = lhs2 + value * (-u) ** w.length
        rhs1 = Scalar.one(self.rank)
        rhs2 = Scalar.one(self.rank)
        for beta in self.datum.inversion_sequence(v):
            rhs1 = rhs1 * root_factor(self.rank, beta)
            monomial = Scalar.monomial(self.rank, beta)
            rhs2 = rhs2 * (monomial - u) / (1 - monomial)
        return lhs1, rhs1, lhs2, rhs2

    def s_sets(self, w, v):
        """S(w, v) and S'(w, v) as sorted lists of positive roots.
        """
        datum = self.datum
        first = []
        second = []
        for root in datum.positive_roots:
            reflection = datum.reflection(root)
            image = reflection * v
            if image.length < v.length and datum.bruhat_leq(w, image):
                first.append(root)
            image = reflection * w
            if image.length > w.length and datum.bruhat_leq(image, v):
                second.append(root)
        return first, second

    def bn_m_coeffs(self, w, v):
        """m(w, v) and mtilde(w, v) from the interval sums.
        """
        datum = self.datum
        if not datum.bruhat_leq(w, v):
            raise ValueError("%s is not below %s in the Bruhat order"
                             % (str(w), str(v)))
        tables = self.casselman_tables()
        m = Scalar.zero(self.rank)
        mtilde = Scalar.zero(self.rank)
        for z in datum.bruhat_interval(w, v):
            m = m + tables.b(z, v)
            value = tables.a(w, z)
            if (v.length - z.length) % 2:
                value = -value
            mtilde = mtilde + value
        return m, mtilde

    def factor_product(self, roots):
        result = Scalar.one(self.rank)
        for root in roots:
            result = result * root_factor(self.rank, root)
        return result

    def _scan_pair(self, pair):
        w, v = pair
        difference = v.length - w.length
        first, second = self.s_sets(w, v)
        entries = []
        if len(first) != difference and len(second) != difference:
            return entries
        m, mtilde = self.bn_m_coeffs(w, v)
        if len(first) == difference:
            rhs = self.factor_product(first)
            entries.append(ConjectureEntry("m", w, v, len(first), difference,
                                           m, rhs, m == rhs))
        if len(second) == difference:
            rhs = self.factor_product(second)
            if difference % 2:
                rhs = -rhs
            entries.append(ConjectureEntry("mtilde", w, v, len(second),
                                           difference, mtilde, rhs,
                                           mtilde == rhs))
        return entries

    def conjecture_check(self):
        """Scan every comparable pair satisfying the cardinality condition.
        """
        if not self.datum.is_simply_laced():
            logger.info("%s is not simply laced, results are informational",
                        self.datum.name)
        pairs = self.casselman_tables().pairs()
        entries = list(itertools.chain.from_iterable(
            run_parallel(self._scan_pair, pairs, self.jobs)))
        for entry in entries:
            if not entry.passed:
                logger.warning("Factorization fails for %s at (%s, %s)",
                               entry.kind, str(entry.w), str(entry.v))
        return ConjectureReport(self.datum, entries, self.bridge_check())

    def bridge_check(self):
        """mtilde(w, v) = (-1)^(l(v) - l(w)) m(v w0, w w0) and
        S'(w, v) = S(v w0, w w0) over all comparable pairs.
        """
        longest = self.datum.longest_element()
        pairs = self.casselman_tables().pairs()
        m_violations = []
        s_violations = []
        for w, v in pairs:
            dual = (v * longest, w * longest)
            mtilde = self.bn_m_coeffs(w, v)[1]
            expected = self.bn_m_coeffs(*dual)[0]
            if (v.length - w.length) % 2:
                expected = -expected
            if mtilde != expected:
                m_violations.append((w, v))
            if sorted(self.s_sets(w, v)[1]) != sorted(self.s_sets(*dual)[0]):
                s_violations.append((w, v))
        return [IdentityCheck("mtilde duality", len(pairs), m_violations),
                IdentityCheck("S' duality", len(pairs), s_violations)]

    def m_tilde_inverse_check(self, w, v):
        """sum_{w <= z <= v} mtilde(w, z) m(z, v) = delta_{w, v}.
        """
        total = Scalar.zero(self.rank)
        for z in self.datum.bruhat_interval(w, v):
            total = (total + self.bn_m_coeffs(w, z)[1] *
                     self.bn_m_coeffs(z, v)[0])
        return total == int(w == v)

    def _whittaker_product(self, y):
        """prod over positive roots gamma not in R(y) of
        (1 - u e^gamma) / (1 - e^-gamma).
        """
        with self._lock:
            if y in self._whittaker_products:
                return self._whittaker_products[y]
        inversions = self.datum.inversion_set(y)
        u = self.u
        result = Scalar.one(self.rank)
        for gamma in self.datum.positive_roots:
            if gamma in inversions:
                continue
            negative = tuple(-k for k in gamma)
            result = result * (1 - u * Scalar.monomial(self.rank, gamma)) / (
                1 - Scalar.monomial(self.rank, negative))
        with self._lock:
            self._whittaker_products[y] = result
        return result

    def whittaker_sum(self, w, mu):
        """sum_{y >= w} b(w, y) y[e^mu prod_{beta > 0, y beta > 0}
        (1 - u e^beta) / (1 - e^-beta)], without the modulus prefactor.
        """
        mu = tuple(int(k) for k in mu)
        if len(mu) != self.rank:
            raise ValueError("mu has %d coordinates, rank is %d"
                             % (len(mu), self.rank))
        tables = self.casselman_tables()
        total = Scalar.zero(self.rank)
        for y in self.datum.elements:
            if not self.datum.bruhat_leq(w, y):
                continue
            term = (tables.b(w, y) * Scalar.monomial(self.rank, y.act(mu)) *
                    self._whittaker_product(y))
            total = total + term
        return total

    def whittaker_cone_survey(self, bound=2):
        """Polynomiality of whittaker_sum over both cones of weights with
        coordinates bounded by *bound*.
        """
        survey = {}
        cones = {"dominant": range(0, bound + 1),
                 "antidominant": range(-bound, 1)}
        for cone, coordinates in sorted(cones.items()):
            checked = 0
            failures = []
            for w in self.datum.elements:
                for mu in itertools.product(coordinates, repeat=self.rank):
                    checked += 1
                    if not is_laurent_polynomial(self.whittaker_sum(w, mu)):
                        failures.append((str(w), list(mu)))
            survey[cone] = {"checked": checked, "failures": failures,
                            "polynomial": not failures}
            logger.info("Whittaker survey on the %s cone of %s: %d of %d "
                        "polynomial", cone, self.datum.name,
                        checked - len(failures), checked)
        return survey

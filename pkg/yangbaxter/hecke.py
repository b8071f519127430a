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

"""The generic Hecke algebra over Q_{t1,t2}(Lambda).

The standard basis {h_w} satisfies (h_i - t1)(h_i - t2) = 0 and the braid
relations. The Yang-Baxter basis is

    Y_v = prod_j (h_{i_j} + (t1 + t2) / E(beta_j))

along a reduced word of v, and the transition tables are

    Y_v = sum_w p(w, v) h_w,    h_v = sum_w ptilde(w, v) Y_w.
"""

import logging
from collections import namedtuple
from functools import lru_cache
from threading import Lock

from yangbaxter.rootdata import DatumMismatchError
from yangbaxter.scalars import E, Scalar, hat, star, weyl_act
from yangbaxter.workers import run_parallel

logger = logging.getLogger(__name__)

IdentityCheck = namedtuple("IdentityCheck", ["name", "checked", "violations"])


@lru_cache(maxsize=None)
def hecke_parameters(rank):
    """(t1 + t2, t1 * t2) as scalars.
    """
    t1 = Scalar.parameter(rank, "t1")
    t2 = Scalar.parameter(rank, "t2")
    return t1 + t2, t1 * t2


def _accumulate(coords, key, value):
    if key in coords:
        coords[key] = coords[key] + value
    else:
        coords[key] = value


class HeckeElt(object):

    """An element sum_w c_w h_w of the Hecke algebra.
    """

    __slots__ = ("datum", "coords")

    def __init__(self, datum, coords=None):
        self.datum = datum
        self.coords = dict((w, c) for w, c in (coords or {}).items() if c)

    def _check(self, other):
        if other.datum is not self.datum:
            raise DatumMismatchError("Hecke elements of %s and %s"
                                     % (self.datum.name, other.datum.name))

    def coefficient(self, w):
        return self.coords.get(w, Scalar.zero(self.datum.rank))

    def items(self):
        """Nonzero coordinates in linear extension order.
        """
        return sorted(self.coords.items(), key=lambda item: item[0].index)

    def support(self):
        return [w for w, _ in self.items()]

    def map_coefficients(self, function):
        return HeckeElt(self.datum, dict((w, function(c))
                                         for w, c in self.coords.items()))

    def __bool__(self):
        return bool(self.coords)

    def __add__(self, other):
        self._check(other)
        coords = dict(self.coords)
        for w, c in other.coords.items():
            _accumulate(coords, w, c)
        return HeckeElt(self.datum, coords)

    def __neg__(self):
        return self.map_coefficients(lambda c: -c)

    def __sub__(self, other):
        return self + (-other)

    def times_generator(self, i):
        """Right multiplication by h_i.
        """
        datum = self.datum
        tsum, tprod = hecke_parameters(datum.rank)
        coords = {}
        for w, c in self.coords.items():
            ws = datum.right_multiply(w, i)
            if ws.length > w.length:
                _accumulate(coords, ws, c)
            else:
                _accumulate(coords, w, c * tsum)
                _accumulate(coords, ws, -(c * tprod))
        return HeckeElt(datum, coords)

    def __mul__(self, other):
        if isinstance(other, HeckeElt):
            return hecke_mul(self, other)
        if isinstance(other, (Scalar, int)):
            return self.map_coefficients(lambda c: c * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self.map_coefficients(lambda c: other * c)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, HeckeElt):
            return NotImplemented
        if other.datum is not self.datum:
            return False
        if set(self.coords) != set(other.coords):
            return False
        return all(self.coords[w] == other.coords[w] for w in self.coords)

    def __ne__(self, other):
        return not self == other

    def __str__(self):
        if not self.coords:
            return "0"
        return " + ".join("(%s)*h[%s]" % (str(c), str(w))
                          for w, c in self.items())

    def __repr__(self):
        return "HeckeElt(" + str(self) + ")"


def hecke_mul(f, g):
    """The product f*g, expanding g along canonical words.
    """
    f._check(g)
    datum = f.datum
    partial = {datum.identity(): f}
    result = HeckeElt(datum)
    for u, c in g.items():
        if u not in partial:
            prefix = datum.identity()
            for i in u.word:
                following = datum.right_multiply(prefix, i)
                if following not in partial:
                    partial[following] = partial[prefix].times_generator(i)
                prefix = following
        result = result + partial[u] * c
    return result


TransitionPair = namedtuple("TransitionPair", ["w", "v"])


class TransitionTables(object):

    """The tables p(w, v) and ptilde(w, v), stored sparsely.
    """

    def __init__(self, datum, p, ptilde):
        self.datum = datum
        self.P = p
        self.Ptilde = ptilde

    def p(self, w, v):
        return self.P.get((w, v), Scalar.zero(self.datum.rank))

    def ptilde(self, w, v):
        return self.Ptilde.get((w, v), Scalar.zero(self.datum.rank))

    def pairs(self):
        """Comparable pairs (w, v), ordered by v and then w.
        """
        datum = self.datum
        return [TransitionPair(w, v) for v in datum.elements
                for w in datum.elements[:v.index + 1]
                if datum.bruhat_leq(w, v)]

    def entries(self, kind="p"):
        table = self.P if kind == "p" else self.Ptilde
        return [(pair, table[pair]) for pair in self.pairs()
                if pair in table]


class HeckeAlgebra(object):

    """The generic Hecke algebra of a root datum, with cached bases.
    """

    def __init__(self, datum):
        self.datum = datum
        self.rank = datum.rank
        self._lock = Lock()
        self._yang_baxter = {}
        self._hat_basis = {}
        self._pairing_rows = {}
        self._recurrences = {}
        self._tables = None

    @property
    def tsum(self):
        return hecke_parameters(self.rank)[0]

    @property
    def tprod(self):
        return hecke_parameters(self.rank)[1]

    def basis(self, w):
        return HeckeElt(self.datum, {w: Scalar.one(self.rank)})

    def one(self):
        return self.basis(self.datum.identity())

    def generator(self, i):
        return self.basis(self.datum.simple_reflection(i))

    def scalar(self, value):
        return HeckeElt(self.datum, {self.datum.identity(): value})

    def yb_factor(self, i, weight):
        """h_i + (t1 + t2) / E(weight).
        """
        return self.generator(i) + self.scalar(self.tsum / E(weight))

    def _cached(self, cache, key, compute):
        with self._lock:
            if key in cache:
                return cache[key]
        value = compute()
        with self._lock:
            cache.setdefault(key, value)
        return value

    def yang_baxter_basis(self, v):
        """Y_v along the canonical word of v.
        """
        if v.datum is not self.datum:
            raise DatumMismatchError("element of %s used with %s"
                                     % (v.datum.name, self.datum.name))

        def compute():
            if v.is_identity():
                return self.one()
            letter = v.word[-1]
            prefix = self.datum.right_multiply(v, letter)
            beta = prefix.act(self.datum.simple_root(letter))
            previous = self.yang_baxter_basis(prefix)
            return (previous.times_generator(letter) +
                    previous * (self.tsum / E(beta)))

        return self._cached(self._yang_baxter, v, compute)

    def yang_baxter_along(self, word):
        """Y computed along an arbitrary reduced word of 0-based letters.
        """
        element, reduced = self.datum.element_from_word(word)
        if not reduced:
            raise ValueError("word %s is not reduced" % str(list(word)))
        result = self.one()
        prefix = self.datum.identity()
        for letter in word:
            beta = prefix.act(self.datum.simple_root(letter))
            result = (result.times_generator(letter) +
                      result * (self.tsum / E(beta)))
            prefix = self.datum.right_multiply(prefix, letter)
        return result

    def right_yb_step(self, v, i):
        """Y_v * v[Y_{s_i}], equal to Y_{v s_i} when v s_i > v.
        """
        factor = self.yb_factor(i, v.act(self.datum.simple_root(i)))
        return self.yang_baxter_basis(v) * factor

    def llt_normalize(self, v):
        """(prod_j E(beta_j) / (t1 + t2)) Y_v.
        """
        factor = Scalar.one(self.rank)
        for beta in self.datum.inversion_sequence(v):
            factor = factor * E(beta) / self.tsum
        return self.yang_baxter_basis(v) * factor

    def transition_tables(self, jobs=1):
        """Assemble P column by column and invert it by back-substitution.
        """
        if self._tables is not None:
            return self._tables
        datum = self.datum
        columns = run_parallel(self.yang_baxter_basis, datum.elements, jobs)
        p = {}
        for v, column in zip(datum.elements, columns):
            for w, c in column.coords.items():
                p[(w, v)] = c
        logger.debug("Assembled P for %s", datum.name)
        inverse = {}

        def invert_column(v):
            column = {v: Scalar.one(self.rank)}
            for w, c in self.yang_baxter_basis(v).items():
                if w == v:
                    continue
                for x, d in inverse[w].items():
                    _accumulate(column, x, -(c * d))
            return dict((x, d) for x, d in column.items() if d)

        longest = datum.longest_element().length
        for length in range(longest + 1):
            level = [v for v in datum.elements if v.length == length]
            for v, column in zip(level, run_parallel(invert_column, level,
                                                     jobs)):
                inverse[v] = column
            logger.debug("Inverted columns of length %d", length)
        ptilde = {}
        for v, column in inverse.items():
            for x, d in column.items():
                ptilde[(x, v)] = d
        self._tables = TransitionTables(datum, p, ptilde)
        return self._tables

    def hat_basis(self, w):
        """hat(h_w), the product of h_i - (t1 + t2) along the word of w.
        """
        def compute():
            if w.is_identity():
                return self.one()
            letter = w.word[-1]
            prefix = self.datum.right_multiply(w, letter)
            previous = self.hat_basis(prefix)
            return previous.times_generator(letter) - previous * self.tsum

        return self._cached(self._hat_basis, w, compute)

    def vee(self, f):
        """h_w -> h_{w^-1}, scalars fixed.
        """
        return HeckeElt(self.datum, dict((w.inverse(), c)
                                         for w, c in f.coords.items()))

    def hat_elt(self, f):
        result = HeckeElt(self.datum)
        for w, c in f.items():
            result = result + self.hat_basis(w) * hat(c)
        return result

    def omega(self, f):
        """h_w -> h_{w0 w w0}.
        """
        longest = self.datum.longest_element()
        return HeckeElt(self.datum, dict((longest * w * longest, c)
                                         for w, c in f.coords.items()))

    def act_coefficients(self, w, f):
        """The Weyl group acting on coefficients only.
        """
        return f.map_coefficients(lambda c: weyl_act(w, c))

    def star_coefficients(self, f):
        return f.map_coefficients(star)

    def _pairing_row(self, x):
        """[h_w0](h_x h_y) for every y.
        """
        def compute():
            datum = self.datum
            longest = datum.longest_element()
            products = {datum.identity(): self.basis(x)}
            row = {}
            for y in datum.elements:
                if not y.is_identity():
                    letter = y.word[-1]
                    prefix = datum.right_multiply(y, letter)
                    products[y] = products[prefix].times_generator(letter)
                value = products[y].coords.get(longest)
                if value:
                    row[y] = value
            return row

        return self._cached(self._pairing_rows, x, compute)

    def inner_product(self, f, g):
        """The coefficient of h_w0 in f * vee(g).
        """
        f._check(g)
        total = Scalar.zero(self.rank)
        for x, c in f.coords.items():
            row = self._pairing_row(x)
            for z, d in g.coords.items():
                value = row.get(z.inverse())
                if value is not None:
                    total = total + c * d * value
        return total

    def _recurrence(self, kind, side, w, v, compute):
        key = (kind, side, w.index, v.index)
        with self._lock:
            if key in self._recurrences:
                return self._recurrences[key]
        value = compute()
        with self._lock:
            self._recurrences[key] = value
        return value

    def recurrence_p(self, w, v, side="left"):
        """p(w, v) from the left or right two-case recurrence alone.
        """
        datum = self.datum
        if v.is_identity():
            return Scalar.constant(self.rank, int(w.is_identity()))
        if not datum.bruhat_leq(w, v):
            return Scalar.zero(self.rank)

        def compute():
            tsum, tprod = self.tsum, self.tprod
            if side == "left":
                letter = v.word[0]
                rest = datum.left_multiply(letter, v)
                other = datum.left_multiply(letter, w)
                s = datum.simple_reflection(letter)
                coeff = tsum / E(datum.simple_root(letter))
                first = weyl_act(s, self.recurrence_p(w, rest, side))
                second = weyl_act(s, self.recurrence_p(other, rest, side))
            else:
                letter = v.word[-1]
                rest = datum.right_multiply(v, letter)
                other = datum.right_multiply(w, letter)
                coeff = tsum / E(rest.act(datum.simple_root(letter)))
                first = self.recurrence_p(w, rest, side)
                second = self.recurrence_p(other, rest, side)
            if other.length > w.length:
                return coeff * first - tprod * second
            return (coeff + tsum) * first + second

        return self._recurrence("p", side, w, v, compute)

    def recurrence_ptilde(self, w, v, side="left"):
        """ptilde(w, v) from the left or right two-case recurrence alone.
        """
        datum = self.datum
        if v.is_identity():
            return Scalar.constant(self.rank, int(w.is_identity()))
        if not datum.bruhat_leq(w, v):
            return Scalar.zero(self.rank)

        def compute():
            if side == "left":
                letter = v.word[0]
                rest = datum.left_multiply(letter, v)
                other = datum.left_multiply(letter, w)
                s = datum.simple_reflection(letter)
                coeff, twist = _demazure_coefficients(datum, letter)
                first = coeff * self.recurrence_ptilde(w, rest, side)
                second = weyl_act(s, self.recurrence_ptilde(other, rest,
                                                            side))
            else:
                letter = v.word[-1]
                rest = datum.right_multiply(v, letter)
                other = datum.right_multiply(w, letter)
                coeff, twist = _demazure_coefficients(datum, letter)
                coeff, twist = weyl_act(w, coeff), weyl_act(w, twist)
                first = coeff * self.recurrence_ptilde(w, rest, side)
                second = self.recurrence_ptilde(other, rest, side)
            if other.length < w.length:
                return first + second
            return first + twist * second

        return self._recurrence("ptilde", side, w, v, compute)

    def hat_expansion(self, v):
        """sum_w (-1)^(l(v) - l(w)) star(p(w, v)) hat(h_w).
        """
        tables = self.transition_tables()
        result = HeckeElt(self.datum)
        for w in self.datum.elements:
            value = tables.P.get((w, v))
            if value is None:
                continue
            term = star(value)
            if (v.length - w.length) % 2:
                term = -term
            result = result + self.hat_basis(w) * term
        return result

    def duality_check(self):
        """ptilde(w, v) = (-1)^(l(v) - l(w)) p(v w0, w w0) for all w <= v.
        """
        tables = self.transition_tables()
        longest = self.datum.longest_element()
        checked = 0
        violations = []
        for w, v in tables.pairs():
            expected = tables.p(v * longest, w * longest)
            if (v.length - w.length) % 2:
                expected = -expected
            checked += 1
            if tables.ptilde(w, v) != expected:
                violations.append((w, v))
        return IdentityCheck("duality", checked, violations)

    def omega_conjugation_check(self):
        """p(w0 w w0, w0 v w0) = star(w0 p(w, v)) for all w <= v.
        """
        tables = self.transition_tables()
        longest = self.datum.longest_element()
        checked = 0
        violations = []
        for w, v in tables.pairs():
            left = tables.p(longest * w * longest, longest * v * longest)
            checked += 1
            if left != star(weyl_act(longest, tables.p(w, v))):
                violations.append((w, v))
        return IdentityCheck("omega conjugation", checked, violations)


@lru_cache(maxsize=None)
def _demazure_coefficients(datum, i):
    """(B_i, A_i * s_i(A_i)) for the ptilde recurrences.
    """
    a, b = demazure_scalars(datum, i)
    return b, a * weyl_act(datum.simple_reflection(i), a)


def demazure_scalars(datum, i):
    """A_i = (t1 + t2 e^-alpha_i) / (1 - e^alpha_i), B_i = (t1 + t2) /
    (1 - e^-alpha_i).
    """
    return root_scalars(datum.rank, datum.simple_root(i))


@lru_cache(maxsize=None)
def root_scalars(rank, root):
    """(A_beta, B_beta) for a root beta given as a weight.
    """
    root = tuple(root)
    negative = tuple(-k for k in root)
    t1 = Scalar.parameter(rank, "t1")
    t2 = Scalar.parameter(rank, "t2")
    one = Scalar.one(rank)
    a = (t1 + t2 * Scalar.monomial(rank, negative)) / (
        one - Scalar.monomial(rank, root))
    b = (t1 + t2) / (one - Scalar.monomial(rank, negative))
    return a, b

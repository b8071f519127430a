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

"""The twisted group algebra Q(Lambda) # W.

Products twist scalars through the Weyl action:
(f delta_w)(g delta_u) = f w(g) delta_{wu}. The generic Demazure-Lusztig
elements y_i = A_i delta_i + B_i satisfy the Hecke relations, and
Phi: y_w -> h_w sends Delta_w = A(w) delta_w to the Yang-Baxter basis.
"""

import logging
from threading import Lock

from yangbaxter.hecke import HeckeElt, demazure_scalars, root_scalars
from yangbaxter.rootdata import DatumMismatchError
from yangbaxter.scalars import Scalar, substitute_parameters, weyl_act

logger = logging.getLogger(__name__)


def _accumulate(coords, key, value):
    if key in coords:
        coords[key] = coords[key] + value
    else:
        coords[key] = value


class TwistedElt(object):

    """An element sum_w f_w delta_w.
    """

    __slots__ = ("datum", "coords")

    def __init__(self, datum, coords=None):
        self.datum = datum
        self.coords = dict((w, c) for w, c in (coords or {}).items() if c)

    def _check(self, other):
        if other.datum is not self.datum:
            raise DatumMismatchError("twisted elements of %s and %s"
                                     % (self.datum.name, other.datum.name))

    def coefficient(self, w):
        return self.coords.get(w, Scalar.zero(self.datum.rank))

    def items(self):
        return sorted(self.coords.items(), key=lambda item: item[0].index)

    def map_coefficients(self, function):
        return TwistedElt(self.datum, dict((w, function(c))
                                           for w, c in self.coords.items()))

    def __bool__(self):
        return bool(self.coords)

    def __add__(self, other):
        if isinstance(other, (Scalar, int)):
            other = TwistedElt(self.datum, {self.datum.identity(): other})
        self._check(other)
        coords = dict(self.coords)
        for w, c in other.coords.items():
            _accumulate(coords, w, c)
        return TwistedElt(self.datum, coords)

    def __neg__(self):
        return self.map_coefficients(lambda c: -c)

    def __sub__(self, other):
        if isinstance(other, (Scalar, int)):
            other = TwistedElt(self.datum, {self.datum.identity(): other})
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TwistedElt):
            return twisted_mul(self, other)
        if isinstance(other, (Scalar, int)):
            return twisted_mul(
                self, TwistedElt(self.datum, {self.datum.identity(): other}))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self.map_coefficients(lambda c: other * c)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, TwistedElt):
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
        return " + ".join("(%s)*d[%s]" % (str(c), str(w))
                          for w, c in self.items())

    def __repr__(self):
        return "TwistedElt(" + str(self) + ")"


def twisted_mul(x, y):
    """(f delta_w)(g delta_u) = f w(g) delta_{wu}.
    """
    x._check(y)
    datum = x.datum
    coords = {}
    for w, f in x.coords.items():
        for u, g in y.coords.items():
            _accumulate(coords, datum.multiply(w, u), f * weyl_act(w, g))
    return TwistedElt(datum, coords)


class TwistedAlgebra(object):

    """The twisted group algebra next to a Hecke algebra of the same datum.
    """

    def __init__(self, hecke):
        self.hecke = hecke
        self.datum = hecke.datum
        self.rank = hecke.rank
        self._lock = Lock()
        self._y_words = {}
        self._a_inverse = {}

    def delta(self, w):
        return TwistedElt(self.datum, {w: Scalar.one(self.rank)})

    def one(self):
        return self.delta(self.datum.identity())

    def scalar(self, value):
        return TwistedElt(self.datum, {self.datum.identity(): value})

    def dl_generator(self, i):
        """y_i = A_i delta_i + B_i.
        """
        a, b = demazure_scalars(self.datum, i)
        return TwistedElt(self.datum, {self.datum.simple_reflection(i): a,
                                       self.datum.identity(): b})

    def y_word(self, w):
        """y_w along the canonical word of w.
        """
        with self._lock:
            if w in self._y_words:
                return self._y_words[w]
        if w.is_identity():
            value = self.one()
        else:
            letter = w.word[-1]
            prefix = self.datum.right_multiply(w, letter)
            value = self.y_word(prefix) * self.dl_generator(letter)
        with self._lock:
            self._y_words.setdefault(w, value)
        return value

    def y_along(self, word):
        """y computed along an arbitrary word of 0-based letters.
        """
        result = self.one()
        for letter in word:
            result = result * self.dl_generator(letter)
        return result

    def y_basis_matrix(self):
        """delta-coordinates of every y_w, keyed by w.
        """
        return dict((w, self.y_word(w).coords) for w in self.datum.elements)

    def a_factor(self, w):
        """A(w) = prod over R(w) of (t1 + t2 e^-beta) / (1 - e^beta).
        """
        result = Scalar.one(self.rank)
        for beta in self.datum.inversion_sequence(w):
            result = result * root_scalars(self.rank, beta)[0]
        return result

    def a_inverse(self, w):
        """1/A(w), built root by root.
        """
        with self._lock:
            if w in self._a_inverse:
                return self._a_inverse[w]
        result = Scalar.one(self.rank)
        for beta in self.datum.inversion_sequence(w):
            result = result * root_scalars(self.rank, beta)[0].invert()
        with self._lock:
            self._a_inverse.setdefault(w, result)
        return result

    def delta_element(self, w):
        """Delta_w = A(w) delta_w.
        """
        return TwistedElt(self.datum, {w: self.a_factor(w)})

    def delta_along(self, word):
        """The product of Delta_{s_i} along a word of 0-based letters.
        """
        result = self.one()
        for letter in word:
            result = result * self.delta_element(
                self.datum.simple_reflection(letter))
        return result

    def phi_iso(self, x):
        """Expand x in the y-basis by back-substitution and send y_w to h_w.
        """
        if x.datum is not self.datum:
            raise DatumMismatchError("twisted element of %s used with %s"
                                     % (x.datum.name, self.datum.name))
        remaining = dict(x.coords)
        coords = {}
        for w in reversed(self.datum.elements):
            value = remaining.pop(w, None)
            if not value:
                continue
            coefficient = value * self.a_inverse(w)
            coords[w] = coefficient
            for u, c in self.y_word(w).coords.items():
                if u != w:
                    _accumulate(remaining, u, -(coefficient * c))
        return HeckeElt(self.datum, coords)

    def ptilde_closed(self, w, v):
        """ptilde(w, v) by the subword formula over the word of v.

        Binary vectors are summed prefix by prefix, grouped by the Weyl
        element their prefix multiplies to.
        """
        datum = self.datum
        states = {datum.identity(): Scalar.one(self.rank)}
        for letter in v.word:
            a, b = demazure_scalars(datum, letter)
            following = {}
            for g, accumulated in states.items():
                _accumulate(following, g, accumulated * weyl_act(g, b))
                _accumulate(following, datum.right_multiply(g, letter),
                            accumulated * weyl_act(g, a))
            states = following
        total = states.get(w)
        if not total:
            return Scalar.zero(self.rank)
        return total * self.a_inverse(w)

    def p_closed(self, w, v):
        """p(w, v) as the y_w coordinate of Delta_v.
        """
        return self.phi_iso(self.delta_element(v)).coefficient(w)

    def p_closed_via_duality(self, w, v):
        """p(w, v) = (-1)^(l(v) - l(w)) ptilde(v w0, w w0).
        """
        longest = self.datum.longest_element()
        value = self.ptilde_closed(v * longest, w * longest)
        if (v.length - w.length) % 2:
            value = -value
        return value

    def specialize_generator(self, i, t1=None, t2=None, u=None):
        """y_i with the Hecke parameters substituted.
        """
        return self.dl_generator(i).map_coefficients(
            lambda c: substitute_parameters(c, t1=t1, t2=t2, u=u))

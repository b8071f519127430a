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

"""Exact arithmetic in Z[t1,t2][Lambda] and its fraction field.

Weights are integer vectors over the fundamental weight basis, so e^lambda
is the Laurent monomial x1^l1 ... xr^lr. The parameters t1, t2 and u (the
formal q^-1) are ordinary polynomial variables of the same sympy ring.

A :class:`Scalar` keeps a Laurent numerator and a multiset of canonical
irreducible denominator factors. Numerators are reduced eagerly by exact
trial division, which makes the reduced form unique: equal values print
identically.
"""

import logging
from functools import lru_cache, reduce

import numpy as np
from sympy import Rational, igcd, ilcm
from sympy.polys.domains import QQ
from sympy.polys.orderings import lex
from sympy.polys.rings import ring

logger = logging.getLogger(__name__)

PARAMETERS = ("t1", "t2", "u")
OFFSET = len(PARAMETERS)


class SpecializationError(ZeroDivisionError):

    """A denominator factor vanished under a parameter substitution.
    """
    pass


@lru_cache(maxsize=None)
def coefficient_ring(rank):
    """The polynomial ring QQ[t1, t2, u, x1, ..., xr].
    """
    if rank < 1:
        raise ValueError("rank must be positive, got " + str(rank))
    names = list(PARAMETERS) + ["x%d" % (k + 1) for k in range(rank)]
    return ring(",".join(names), QQ, lex)[0]


def _term_key(monom, shift):
    """Printing order: weight exponents first, then t1, t2, u.
    """
    weight = tuple(e + s for e, s in zip(monom[OFFSET:], shift))
    return weight, tuple(monom[:OFFSET])


class LaurentPoly(object):

    """The Laurent polynomial x^shift * poly.

    *poly* has no monomial content in the x variables, so the pair is unique.
    """

    __slots__ = ("poly", "shift")

    def __init__(self, poly, shift=None):
        rank = poly.ring.ngens - OFFSET
        if shift is None:
            shift = (0, ) * rank
        elif len(shift) != rank:
            raise ValueError("weight of length %d in a rank %d ring"
                             % (len(shift), rank))
        if not poly:
            shift = (0, ) * rank
        else:
            low = tuple(min(monom[OFFSET + k] for monom in poly.keys())
                        for k in range(rank))
            if any(low):
                cut = (0, ) * OFFSET + low
                poly = poly.new([(tuple(a - b for a, b in zip(monom, cut)),
                                  coeff)
                                 for monom, coeff in poly.items()])
                shift = tuple(a + b for a, b in zip(shift, low))
        self.poly = poly
        self.shift = tuple(int(k) for k in shift)

    @classmethod
    def monomial(cls, rank, weight, coeff=1):
        """coeff * e^weight.
        """
        weight = tuple(int(k) for k in weight)
        if len(weight) != rank:
            raise ValueError("weight of length %d in a rank %d ring"
                             % (len(weight), rank))
        return cls(coefficient_ring(rank).ground_new(QQ.convert(coeff)),
                   weight)

    @property
    def ring(self):
        return self.poly.ring

    @property
    def rank(self):
        return self.poly.ring.ngens - OFFSET

    def is_unit(self):
        """True for a nonzero constant times a weight monomial.
        """
        return bool(self.poly) and self.poly.is_ground

    def _check(self, other):
        if self.poly.ring is not other.poly.ring:
            raise ValueError("rank mismatch: %d and %d"
                             % (self.rank, other.rank))

    def __bool__(self):
        return bool(self.poly)

    def __add__(self, other):
        self._check(other)
        if not other.poly:
            return self
        if not self.poly:
            return other
        low = tuple(min(a, b) for a, b in zip(self.shift, other.shift))
        left = self.poly.mul_monom(
            (0, ) * OFFSET + tuple(a - b for a, b in zip(self.shift, low)))
        right = other.poly.mul_monom(
            (0, ) * OFFSET + tuple(a - b for a, b in zip(other.shift, low)))
        return LaurentPoly(left + right, low)

    def __neg__(self):
        return LaurentPoly(-self.poly, self.shift)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        return LaurentPoly(self.poly * other.poly,
                           tuple(a + b for a, b in zip(self.shift,
                                                       other.shift)))

    def __pow__(self, exponent):
        return LaurentPoly(self.poly ** exponent,
                           tuple(exponent * k for k in self.shift))

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.shift == other.shift and self.poly == other.poly

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.poly, self.shift))

    def terms(self):
        """Sorted list of (weight, parameter exponents, coefficient).
        """
        items = sorted(self.poly.items(),
                       key=lambda item: _term_key(item[0], self.shift))
        return [_term_key(monom, self.shift) + (coeff, )
                for monom, coeff in items]

    def transform(self, matrix):
        """Apply an integer matrix to every weight exponent.
        """
        matrix = np.asarray(matrix)
        rank = self.rank
        if matrix.shape != (rank, rank):
            raise ValueError("matrix of shape %s acting on rank %d weights"
                             % (str(matrix.shape), rank))
        if not self.poly:
            return self
        monoms = list(self.poly.keys())
        weights = np.array([monom[OFFSET:] for monom in monoms],
                           dtype=np.int64) + np.array(self.shift,
                                                      dtype=np.int64)
        images = weights.dot(matrix.T)
        low = images.min(axis=0)
        images = (images - low).tolist()
        poly = self.poly.new([(tuple(monom[:OFFSET]) + tuple(image),
                               self.poly[monom])
                              for monom, image in zip(monoms, images)])
        return LaurentPoly(poly, low.tolist())

    def substitute(self, replacements):
        """Substitute parameters simultaneously, keeping the weight shift.
        """
        return LaurentPoly(self.poly.compose(list(replacements)), self.shift)

    def format(self, style="text"):
        if not self.poly:
            return "0"
        names = _NAMES[style]
        pieces = []
        for weight, params, coeff in self.terms():
            factors = []
            for name, exponent in zip(names, params + weight):
                if exponent == 1:
                    factors.append(name)
                elif exponent:
                    factors.append(_power(name, exponent, style))
            negative = coeff < 0
            number = _format_number(abs(coeff), style)
            if not factors:
                body = number
            elif number == "1":
                body = _join(factors, style)
            else:
                body = _join([number] + factors, style)
            if not pieces:
                pieces.append(("-" if negative else "") + body)
            else:
                pieces.append((" - " if negative else " + ") + body)
        return "".join(pieces)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return "LaurentPoly(" + str(self) + ")"


class _Names(dict):

    def __missing__(self, style):
        if style == "latex":
            names = ["t_{1}", "t_{2}", "u"] + ["x_{%d}" % (k + 1)
                                              for k in range(32)]
        else:
            names = list(PARAMETERS) + ["x%d" % (k + 1) for k in range(32)]
        self[style] = names
        return names


_NAMES = _Names()


def _power(name, exponent, style):
    if style == "latex":
        return "%s^{%d}" % (name, exponent)
    return "%s^%d" % (name, exponent)


def _join(factors, style):
    if style == "latex":
        return " ".join(factors)
    return "*".join(factors)


def _format_number(value, style):
    numerator, denominator = int(value.numerator), int(value.denominator)
    if denominator == 1:
        return str(numerator)
    if style == "latex":
        return "\\frac{%d}{%d}" % (numerator, denominator)
    return "%d/%d" % (numerator, denominator)


def _canonical(lpoly):
    """Split *lpoly* into (constant, weight, body).

    lpoly == constant * e^weight * body, where body has coprime integer
    coefficients, no weight content and a positive first printed term.
    """
    poly = lpoly.poly
    coeffs = list(poly.values())
    numerator = reduce(igcd, (abs(int(c.numerator)) for c in coeffs))
    denominator = reduce(ilcm, (int(c.denominator) for c in coeffs))
    first = min(poly.keys(), key=lambda monom: _term_key(monom, lpoly.shift))
    scale = QQ(denominator, numerator)
    if poly[first] < 0:
        scale = -scale
    body = poly.mul_ground(scale)
    return 1 / scale, lpoly.shift, body


@lru_cache(maxsize=None)
def _factor_key(body):
    return LaurentPoly(body).format()


@lru_cache(maxsize=8192)
def _irreducible_factors(poly):
    """Factor *poly* into canonical irreducibles.

    Returns (constant, weight, ((factor, multiplicity), ...)).
    """
    rank = poly.ring.ngens - OFFSET
    if poly.is_ground:
        return poly.LC, (0, ) * rank, ()
    constant, factors = poly.factor_list()
    weight = [0] * rank
    parts = {}
    for factor, multiplicity in factors:
        unit, shift, body = _canonical(LaurentPoly(factor))
        constant *= unit ** multiplicity
        weight = [w + multiplicity * s for w, s in zip(weight, shift)]
        if body.is_ground:
            constant *= body.LC ** multiplicity
            continue
        parts[body] = parts.get(body, 0) + multiplicity
    return constant, tuple(weight), _sorted_factors(parts)


def _sorted_factors(parts):
    return tuple(sorted(((body, k) for body, k in parts.items() if k),
                        key=lambda item: _factor_key(item[0])))


def _product(parts, rank):
    result = LaurentPoly.monomial(rank, (0, ) * rank)
    for body, multiplicity in parts.items():
        if multiplicity:
            result = result * LaurentPoly(body ** multiplicity)
    return result


def _reduced(numerator, parts, candidates=None):
    """Build a Scalar, dividing out denominator factors from *numerator*.
    """
    if not numerator:
        return Scalar(numerator)
    if numerator.is_unit():
        return Scalar(numerator, _sorted_factors(parts))
    parts = dict(parts)
    for body in (parts if candidates is None else candidates):
        multiplicity = parts.get(body, 0)
        while multiplicity:
            quotient, remainder = numerator.poly.div(body)
            if remainder:
                break
            numerator = LaurentPoly(quotient, numerator.shift)
            multiplicity -= 1
        parts[body] = multiplicity
    return Scalar(numerator, _sorted_factors(parts))


class Scalar(object):

    """An element of the fraction field Q_{t1,t2}(Lambda).

    Use the class methods or the arithmetic operators to make new scalars;
    the constructor expects an already reduced numerator and factor tuple.
    """

    __slots__ = ("numerator", "factors")

    def __init__(self, numerator, factors=()):
        self.numerator = numerator
        self.factors = factors

    @classmethod
    def constant(cls, rank, value):
        if isinstance(value, Rational):
            value = QQ(int(value.p), int(value.q))
        return cls(LaurentPoly.monomial(rank, (0, ) * rank, value))

    @classmethod
    def zero(cls, rank):
        return cls.constant(rank, 0)

    @classmethod
    def one(cls, rank):
        return cls.constant(rank, 1)

    @classmethod
    def monomial(cls, rank, weight, coeff=1):
        """coeff * e^weight.
        """
        return cls(LaurentPoly.monomial(rank, weight, coeff))

    @classmethod
    def parameter(cls, rank, name):
        """One of the generators t1, t2 or u.
        """
        try:
            index = PARAMETERS.index(name)
        except ValueError:
            raise ValueError("unknown parameter " + str(name))
        return cls(LaurentPoly(coefficient_ring(rank).gens[index]))

    @classmethod
    def from_laurent(cls, lpoly):
        return cls(lpoly)

    @property
    def rank(self):
        return self.numerator.rank

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.numerator.ring is not self.numerator.ring:
                raise ValueError("rank mismatch: %d and %d"
                                 % (self.rank, other.rank))
            return other
        if isinstance(other, (int, Rational)):
            return Scalar.constant(self.rank, other)
        return NotImplemented

    def __bool__(self):
        return bool(self.numerator)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other:
            return self
        if not self:
            return other
        if self.factors == other.factors:
            return _reduced(self.numerator + other.numerator,
                            dict(self.factors))
        mine, theirs = dict(self.factors), dict(other.factors)
        common = dict(mine)
        for body, multiplicity in theirs.items():
            common[body] = max(common.get(body, 0), multiplicity)
        rank = self.rank
        left = self.numerator * _product(
            dict((b, k - mine.get(b, 0)) for b, k in common.items()), rank)
        right = other.numerator * _product(
            dict((b, k - theirs.get(b, 0)) for b, k in common.items()), rank)
        return _reduced(left + right, common)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.numerator, self.factors)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self or not other:
            return Scalar.zero(self.rank)
        numerator = self.numerator * other.numerator
        parts = dict(self.factors)
        for body, multiplicity in other.factors:
            parts[body] = parts.get(body, 0) + multiplicity
        candidates = []
        if not other.numerator.is_unit():
            candidates.extend(body for body, _ in self.factors)
        if not self.numerator.is_unit():
            candidates.extend(body for body, _ in other.factors)
        return _reduced(numerator, parts, candidates)

    __rmul__ = __mul__

    def invert(self):
        """Return 1/self.
        """
        if not self:
            raise ZeroDivisionError("the zero scalar has no inverse")
        constant, weight, parts = _irreducible_factors(self.numerator.poly)
        rank = self.rank
        unit = LaurentPoly.monomial(
            rank,
            [-(a + b) for a, b in zip(weight, self.numerator.shift)],
            1 / constant)
        return Scalar(_product(dict(self.factors), rank) * unit, parts)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.invert()

    def __rtruediv__(self, other):
        return self.invert() * other

    def __pow__(self, exponent):
        if exponent < 0:
            return self.invert() ** (-exponent)
        result = Scalar.one(self.rank)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Rational)):
            other = Scalar.constant(self.rank, other)
        if not isinstance(other, Scalar):
            return NotImplemented
        if self.numerator == other.numerator and self.factors == other.factors:
            return True
        if self.numerator.ring is not other.numerator.ring:
            return False
        rank = self.rank
        return (self.numerator * _product(dict(other.factors), rank) ==
                other.numerator * _product(dict(self.factors), rank))

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.numerator, self.factors))

    def denominator(self):
        """The product of the denominator factors, as a LaurentPoly.
        """
        return _product(dict(self.factors), self.rank)

    def is_constant(self):
        return (not self.factors and
                (not self.numerator or self.numerator.is_unit()) and
                not any(self.numerator.shift))

    def format(self, style="text"):
        numerator = self.numerator.format(style)
        if not self.factors:
            return numerator
        parts = []
        for body, multiplicity in self.factors:
            part = "(" + LaurentPoly(body).format(style) + ")"
            if multiplicity > 1:
                part = _power(part, multiplicity, style)
            parts.append(part)
        if style == "latex":
            return "\\frac{%s}{%s}" % (numerator, " ".join(parts))
        if len(self.numerator.poly) > 1:
            numerator = "(" + numerator + ")"
        denominator = "*".join(parts)
        if len(parts) > 1 or self.factors[0][1] > 1:
            denominator = "(" + denominator + ")"
        return numerator + " / " + denominator

    def __str__(self):
        return self.format()

    def __repr__(self):
        return "Scalar(" + str(self) + ")"

    def _automorphic(self, image):
        """Apply a ring automorphism given on Laurent polynomials.

        Irreducible factors stay irreducible, so they are only
        re-canonicalized and their units move to the numerator.
        """
        numerator = image(self.numerator)
        parts = {}
        for body, multiplicity in self.factors:
            constant, weight, new_body = _canonical(image(LaurentPoly(body)))
            unit = LaurentPoly.monomial(
                self.rank, [-multiplicity * w for w in weight],
                constant ** (-multiplicity))
            numerator = numerator * unit
            parts[new_body] = parts.get(new_body, 0) + multiplicity
        return Scalar(numerator, _sorted_factors(parts))

    def _substituted(self, image):
        """Apply a ring map that may merge or split denominator factors.
        """
        result = Scalar(image(self.numerator))
        for body, multiplicity in self.factors:
            factor = image(LaurentPoly(body))
            if not factor:
                raise SpecializationError(
                    "denominator factor %s vanishes under the substitution"
                    % LaurentPoly(body).format())
            result = result * (Scalar(factor).invert() ** multiplicity)
        return result


def _parameter_gens(rank):
    return coefficient_ring(rank).gens[:OFFSET]


def E(weight):
    """The element e^-weight - 1.
    """
    weight = [int(k) for k in weight]
    rank = len(weight)
    return (Scalar.monomial(rank, [-k for k in weight]) -
            Scalar.one(rank))


def weyl_act(element, scalar):
    """Apply a Weyl group element (or its weight matrix) to the exponents.
    """
    matrix = np.asarray(getattr(element, "matrix", element))
    return scalar._automorphic(lambda lpoly: lpoly.transform(matrix))


def star(scalar):
    """e^lambda -> e^-lambda.
    """
    matrix = -np.identity(scalar.rank, dtype=np.int64)
    return scalar._automorphic(lambda lpoly: lpoly.transform(matrix))


def hat(scalar):
    """t1 -> -t2, t2 -> -t1.
    """
    t1, t2, _ = _parameter_gens(scalar.rank)
    replacements = [(t1, -t2), (t2, -t1)]
    return scalar._automorphic(lambda lpoly: lpoly.substitute(replacements))


def _as_parameter_poly(value, rank):
    if isinstance(value, (int, Rational)):
        return coefficient_ring(rank).ground_new(
            Scalar.constant(rank, value).numerator.poly.LC)
    if (not isinstance(value, Scalar) or value.factors or
            any(value.numerator.shift) or
            any(any(monom[OFFSET:]) for monom in value.numerator.poly.keys())):
        raise ValueError("parameter images must be polynomials in t1, t2, u")
    return value.numerator.poly


def substitute_parameters(scalar, t1=None, t2=None, u=None):
    """Substitute polynomials in the parameters for t1, t2 and u.
    """
    rank = scalar.rank
    replacements = [(gen, _as_parameter_poly(value, rank))
                    for gen, value in zip(_parameter_gens(rank), (t1, t2, u))
                    if value is not None]
    if not replacements:
        return scalar
    return scalar._substituted(lambda lpoly: lpoly.substitute(replacements))


def specialize_q(scalar):
    """t1 -> -u, t2 -> 1 where u stands for q^-1.
    """
    rank = scalar.rank
    return substitute_parameters(scalar, t1=-Scalar.parameter(rank, "u"),
                                 t2=1)


def evaluate_u(scalar, q):
    """Substitute u = 1/q for an exact nonzero rational q.
    """
    q = Rational(q)
    if q == 0:
        raise ValueError("q must be nonzero")
    return substitute_parameters(scalar, u=1 / q)


def as_rational(scalar):
    """The value as a sympy Rational, or None if it is not a constant.
    """
    if not scalar:
        return Rational(0)
    if not scalar.is_constant():
        return None
    value = scalar.numerator.poly.LC
    return Rational(int(value.numerator), int(value.denominator))


def is_laurent_polynomial(scalar):
    """True iff the reduced form has no denominator.
    """
    return not scalar.factors

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

"""Root data of finite type, Weyl groups and the Bruhat order.

Conventions: cartan[i][j] = <alpha_i^vee, alpha_j>, weights are written
in the fundamental weight basis, so alpha_j is column j of the Cartan
matrix and s_i maps omega_j to omega_j - delta_ij alpha_i. In B_n the last
simple root is short; C_n is the transpose of B_n.
"""

import logging
import re
from functools import lru_cache
from math import factorial

import numpy as np

logger = logging.getLogger(__name__)

DEFAULT_CAP = 100000

CONVENTION = ("cartan[i][j] = <alpha_i^vee, alpha_j>; weights in the "
              "fundamental weight basis; B_n has alpha_n short, C_n is the "
              "transpose of B_n")

_LETTER = re.compile(r"s(\d+)")


class UnsupportedTypeError(ValueError):

    """Unknown Cartan type or rank out of range.
    """
    pass


class GroupTooLargeError(ValueError):

    """The Weyl group is larger than the configured cap.
    """
    pass


class DatumMismatchError(ValueError):

    """Objects from two different root data were combined.
    """
    pass


def _chain(rank):
    cartan = 2 * np.identity(rank, dtype=np.int64)
    for i in range(rank - 1):
        cartan[i, i + 1] = cartan[i + 1, i] = -1
    return cartan


def cartan_matrix(type_label, rank):
    """The Cartan matrix of a finite irreducible type.
    """
    label = str(type_label).upper()
    if label == "A" and rank >= 1:
        return _chain(rank)
    if label in ("B", "C") and rank >= 2:
        cartan = _chain(rank)
        cartan[rank - 1, rank - 2] = -2
        return cartan if label == "B" else cartan.T.copy()
    if label == "D" and rank >= 3:
        cartan = _chain(rank)
        cartan[rank - 1, rank - 2] = cartan[rank - 2, rank - 1] = 0
        cartan[rank - 1, rank - 3] = cartan[rank - 3, rank - 1] = -1
        return cartan
    if label == "G" and rank == 2:
        return np.array([[2, -3], [-1, 2]], dtype=np.int64)
    if label == "F" and rank == 4:
        return np.array([[2, -1, 0, 0],
                         [-1, 2, -2, 0],
                         [0, -1, 2, -1],
                         [0, 0, -1, 2]], dtype=np.int64)
    if label == "E" and rank in (6, 7, 8):
        cartan = 2 * np.identity(rank, dtype=np.int64)
        edges = [(0, 2), (1, 3), (2, 3)] + [(k, k + 1)
                                            for k in range(3, rank - 1)]
        for i, j in edges:
            cartan[i, j] = cartan[j, i] = -1
        return cartan
    raise UnsupportedTypeError("unsupported type %s%s" % (type_label, rank))


def weyl_group_order(type_label, rank):
    """The classical order of W, used to refuse oversized groups early.
    """
    label = str(type_label).upper()
    if label == "A":
        return factorial(rank + 1)
    if label in ("B", "C"):
        return 2 ** rank * factorial(rank)
    if label == "D":
        return 2 ** (rank - 1) * factorial(rank)
    return {("G", 2): 12, ("F", 4): 1152, ("E", 6): 51840,
            ("E", 7): 2903040, ("E", 8): 696729600}.get((label, rank))


class WeylElt(object):

    """An element of the Weyl group of a root datum.
    """

    __slots__ = ("datum", "index")

    def __init__(self, datum, index):
        self.datum = datum
        self.index = index

    @property
    def word(self):
        """The lexicographically smallest reduced word (0-based letters).
        """
        return self.datum._words[self.index]

    @property
    def length(self):
        return self.datum._lengths[self.index]

    @property
    def matrix(self):
        return self.datum._matrices[self.index]

    def __mul__(self, other):
        return self.datum.multiply(self, other)

    def inverse(self):
        return self.datum.inverse(self)

    def act(self, weight):
        """Image of a weight, as a tuple of ints.
        """
        return tuple(self.matrix.dot(np.asarray(weight, dtype=np.int64))
                     .tolist())

    def is_identity(self):
        return self.index == 0

    def __eq__(self, other):
        return (isinstance(other, WeylElt) and other.datum is self.datum and
                other.index == self.index)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.index)

    def __str__(self):
        return format_word(self.word)

    def __repr__(self):
        return "WeylElt(%s%d: %s)" % (self.datum.type_label,
                                      self.datum.rank, str(self))


def format_word(word):
    """Letters are printed 1-based, the empty word as e.
    """
    if not word:
        return "e"
    return "".join("s%d" % (i + 1) for i in word)


class RootDatum(object):

    """A finite root datum with its enumerated Weyl group.
    """

    def __init__(self, type_label, cartan, cap=DEFAULT_CAP):
        self.cartan = np.array(cartan, dtype=np.int64)
        self.rank = self.cartan.shape[0]
        self.type_label = str(type_label)
        self.cap = cap
        self._check_cartan()
        self._generators = [self._simple_reflection_matrix(i)
                            for i in range(self.rank)]
        self._enumerate()
        self.elements = [WeylElt(self, k) for k in range(len(self._words))]
        self._build_roots()
        self._build_bruhat()
        logger.info("Built %s%d: |W|=%d, |R+|=%d", self.type_label,
                    self.rank, self.order, len(self.positive_roots))

    @classmethod
    def from_cartan(cls, type_label, cartan, cap=DEFAULT_CAP):
        return cls(type_label, cartan, cap)

    @property
    def name(self):
        return "%s%d" % (self.type_label, self.rank)

    @property
    def order(self):
        return len(self.elements)

    def _check_cartan(self):
        cartan = self.cartan
        if cartan.ndim != 2 or cartan.shape[0] != cartan.shape[1]:
            raise UnsupportedTypeError("Cartan matrix must be square")
        for i in range(self.rank):
            if cartan[i, i] != 2:
                raise UnsupportedTypeError("diagonal entries must be 2")
            for j in range(self.rank):
                if i == j:
                    continue
                if cartan[i, j] > 0 or (cartan[i, j] == 0) != (cartan[j, i]
                                                               == 0):
                    raise UnsupportedTypeError(
                        "invalid off-diagonal entries at (%d, %d)" % (i, j))
                if cartan[i, j] * cartan[j, i] > 3:
                    raise UnsupportedTypeError(
                        "not of finite type at (%d, %d)" % (i, j))

    def _simple_reflection_matrix(self, i):
        matrix = np.identity(self.rank, dtype=np.int64)
        matrix[:, i] -= self.cartan[:, i]
        return matrix

    def _enumerate(self):
        """Breadth first closure from the identity by right multiplication.
        """
        identity = np.identity(self.rank, dtype=np.int64)
        matrices = [identity]
        words = [()]
        lengths = [0]
        lookup = {identity.tobytes(): 0}
        right = []
        current = 0
        while current < len(matrices):
            row = []
            for i, generator in enumerate(self._generators):
                matrix = matrices[current].dot(generator)
                key = matrix.tobytes()
                found = lookup.get(key)
                if found is None:
                    if len(matrices) >= self.cap:
                        raise GroupTooLargeError(
                            "Weyl group of %s%d exceeds the cap of %d "
                            "elements" % (self.type_label, self.rank,
                                          self.cap))
                    found = len(matrices)
                    lookup[key] = found
                    matrices.append(matrix)
                    words.append(words[current] + (i, ))
                    lengths.append(lengths[current] + 1)
                row.append(found)
            right.append(row)
            current += 1
        self._matrices = matrices
        self._words = words
        self._lengths = lengths
        self._lookup = lookup
        self._right = right
        self._left = [[lookup[generator.dot(matrix).tobytes()]
                       for generator in self._generators]
                      for matrix in matrices]
        logger.debug("Enumerated %d elements of W(%s%d)", len(matrices),
                      self.type_label, self.rank)

    def _build_roots(self):
        """Orbit of the simple roots, kept in simple root coordinates.
        """
        rank = self.rank
        witness = {}
        queue = []
        for i in range(rank):
            coords = tuple(int(i == k) for k in range(rank))
            witness[coords] = (0, i)
            queue.append(coords)
        while queue:
            coords = queue.pop(0)
            element, i = witness[coords]
            for j in range(rank):
                pairing = int(self.cartan[j].dot(coords))
                image = list(coords)
                image[j] -= pairing
                image = tuple(image)
                if image not in witness:
                    witness[image] = (self._left[element][j], i)
                    queue.append(image)
        positive = sorted((coords for coords in witness
                           if all(c >= 0 for c in coords)),
                          key=lambda coords: (sum(coords),
                                              tuple(-c for c in coords)))
        self.positive_roots_alpha = positive
        self.positive_roots = [self.root_weight(coords)
                               for coords in positive]
        self._roots = dict((self.root_weight(coords), coords)
                           for coords in witness)
        self._witness = dict((self.root_weight(coords), witness[coords])
                             for coords in witness)
        self._reflections = {}
        for root in self.positive_roots:
            element, i = self._witness[root]
            u = self.elements[element]
            self._reflections[root] = self.multiply(
                self.multiply(u, self.simple_reflection(i)), u.inverse())

    def _build_bruhat(self):
        """Down-sets as integer bitsets, closing the reflection covers.
        """
        reflections = [self._reflections[root].matrix
                       for root in self.positive_roots]
        below = []
        for index, matrix in enumerate(self._matrices):
            down = 1 << index
            length = self._lengths[index]
            for reflection in reflections:
                other = self._lookup[matrix.dot(reflection).tobytes()]
                if self._lengths[other] == length - 1:
                    down |= below[other]
            below.append(down)
        self._below = below

    def root_weight(self, coords):
        """Weight coordinates of a root given in simple root coordinates.
        """
        return tuple(self.cartan.dot(np.asarray(coords, dtype=np.int64))
                     .tolist())

    def simple_root(self, i):
        return tuple(self.cartan[:, i].tolist())

    def simple_reflection(self, i):
        return self.elements[self._right[0][i]]

    def identity(self):
        return self.elements[0]

    def is_root(self, weight):
        return tuple(weight) in self._roots

    def is_positive_root(self, weight):
        try:
            coords = self._roots[tuple(weight)]
        except KeyError:
            raise ValueError("%s is not a root of %s"
                             % (str(tuple(weight)), self.name))
        return all(c >= 0 for c in coords)

    def root_coordinates(self, weight):
        """Simple root coordinates of a root given as a weight.
        """
        try:
            return self._roots[tuple(weight)]
        except KeyError:
            raise ValueError("%s is not a root of %s"
                             % (str(tuple(weight)), self.name))

    def _check(self, *elements):
        for element in elements:
            if element.datum is not self:
                raise DatumMismatchError(
                    "element of %s used with %s" % (element.datum.name,
                                                    self.name))

    def multiply(self, u, v):
        self._check(u, v)
        index = u.index
        for i in v.word:
            index = self._right[index][i]
        return self.elements[index]

    def inverse(self, u):
        self._check(u)
        index = 0
        for i in reversed(u.word):
            index = self._right[index][i]
        return self.elements[index]

    def right_multiply(self, u, i):
        """u s_i.
        """
        return self.elements[self._right[u.index][i]]

    def left_multiply(self, i, u):
        """s_i u.
        """
        return self.elements[self._left[u.index][i]]

    def right_descents(self, u):
        return [i for i in range(self.rank)
                if self._lengths[self._right[u.index][i]] < u.length]

    def left_descents(self, u):
        return [i for i in range(self.rank)
                if self._lengths[self._left[u.index][i]] < u.length]

    def element_from_word(self, word):
        """Multiply out a word of 0-based letters.

        Returns the element and whether the word was reduced.
        """
        index = 0
        for i in word:
            if not 0 <= i < self.rank:
                raise ValueError("unknown letter s%d for rank %d"
                                 % (i + 1, self.rank))
            index = self._right[index][i]
        element = self.elements[index]
        return element, element.length == len(word)

    def parse_word(self, text):
        """Parse e, s1s2s1 or s1.s2.s1 into (element, reduced).
        """
        text = text.strip()
        if text in ("", "e", "1"):
            return self.identity(), True
        letters = text.replace(".", "")
        word = []
        position = 0
        while position < len(letters):
            match = _LETTER.match(letters, position)
            if match is None:
                raise ValueError("unknown letter %r in word %r"
                                 % (letters[position], text))
            letter = int(match.group(1))
            if not 1 <= letter <= self.rank:
                raise ValueError("unknown letter s%d in word %r (rank %d)"
                                 % (letter, text, self.rank))
            word.append(letter - 1)
            position = match.end()
        return self.element_from_word(word)

    def longest_element(self):
        return self.elements[-1]

    def bruhat_leq(self, u, v):
        self._check(u, v)
        return bool((self._below[v.index] >> u.index) & 1)

    def bruhat_interval(self, u, v):
        """Elements z with u <= z <= v, in linear extension order.
        """
        self._check(u, v)
        if not self.bruhat_leq(u, v):
            return []
        return [z for z in self.elements[u.index:v.index + 1]
                if (self._below[z.index] >> u.index) & 1 and
                (self._below[v.index] >> z.index) & 1]

    def linear_extension(self):
        """All elements, by length and then canonical word.
        """
        return list(self.elements)

    def inversion_sequence(self, v):
        """beta_j = s_{i_1} ... s_{i_{j-1}}(alpha_{i_j}) along the canonical
        word of v, as weights.
        """
        self._check(v)
        prefix = 0
        roots = []
        for i in v.word:
            roots.append(tuple(self._matrices[prefix]
                               .dot(self.cartan[:, i]).tolist()))
            prefix = self._right[prefix][i]
        return roots

    def inversion_set(self, v):
        """R(v) = {beta > 0 : v^-1 beta < 0}.
        """
        return frozenset(self.inversion_sequence(v))

    def reflection(self, root):
        """The reflection s_beta of a positive root given as a weight.
        """
        root = tuple(root)
        if root not in self._reflections:
            raise ValueError("%s is not a positive root of %s"
                             % (str(root), self.name))
        return self._reflections[root]

    def coroot(self, root):
        """The coroot of *root* as the linear form on weights.
        """
        matrix = self.reflection(root).matrix
        difference = np.identity(self.rank, dtype=np.int64) - matrix
        row = next(k for k, c in enumerate(root) if c)
        return tuple((difference[row] // root[row]).tolist())

    def pairing(self, root, weight):
        """<beta^vee, weight>.
        """
        return int(np.dot(self.coroot(root), weight))

    def coxeter_number(self, i, j):
        """The order m_ij of s_i s_j.
        """
        if i == j:
            return 1
        return {0: 2, 1: 3, 2: 4, 3: 6}[int(self.cartan[i, j] *
                                            self.cartan[j, i])]

    def is_simply_laced(self):
        return all(self.cartan[i, j] * self.cartan[j, i] <= 1
                   for i in range(self.rank) for j in range(self.rank)
                   if i != j)

    def to_dict(self):
        return {"type": self.type_label,
                "rank": self.rank,
                "convention": CONVENTION,
                "cartan": self.cartan.tolist(),
                "order": self.order,
                "positive_roots": [{"alpha": list(coords),
                                    "weight": list(self.root_weight(coords))}
                                   for coords in self.positive_roots_alpha],
                "elements": [{"word": str(w), "length": w.length}
                             for w in self.elements],
                "longest": str(self.longest_element())}


def subword_leq(u, v):
    """Bruhat order by the subword property of the canonical word of v.
    """
    datum = v.datum
    reachable = set([0])
    for i in v.word:
        reachable |= set(datum._right[k][i] for k in reachable)
    return u.index in reachable


@lru_cache(maxsize=None)
def build_root_datum(type_label, rank, cap=DEFAULT_CAP):
    """Build the root datum of type *type_label* and rank *rank*.
    """
    label = str(type_label).upper()
    cartan = cartan_matrix(label, rank)
    order = weyl_group_order(label, rank)
    if order is not None and order > cap:
        raise GroupTooLargeError("|W(%s%d)| = %d exceeds the cap of %d"
                                 % (label, rank, order, cap))
    return RootDatum(label, cartan, cap)

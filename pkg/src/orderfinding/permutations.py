# Copyright 2026 The orderfinding authors.
#
# For a full list of individual contributors, please see the commit history.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Permutations on four elements and the oracle of the order-finding circuit."""
import itertools
import re

import numpy as np

from orderfinding.circuit import Circuit
from orderfinding.exceptions import ParseError, StateError
from orderfinding.gates import ControlledUnitary

ELEMENTS = 4
# Exponent bit k of x is held by this control qubit; x2 on qubit 1.
STAGE_CONTROLS = ((1, 3), (2, 2), (4, 1))
TARGET_QUBITS = (4, 5)

_TOKEN = re.compile(r"\s*(?:(\()|(\))|(\d+)|(,))")


class Permutation:
    """Bijection on {0, 1, 2, 3}, stored as its image list.

    Text forms accepted by :meth:`parse`::

        "()"            # identity
        "(0 1 2 3)"     # cycle notation, several cycles allowed
        "1,0,3,2"       # image list, image[y] = pi(y)
    """

    def __init__(self, images):
        """Initialize.

        :raises: ValueError if images is not a bijection on 0..3.
        :param images: image[y] = pi(y).
        :type images: sequence of int
        """
        images = tuple(int(image) for image in images)
        if sorted(images) != list(range(ELEMENTS)):
            raise ValueError("{!r} is not a permutation of 0..{}".format(images, ELEMENTS - 1))
        self.images = images

    @classmethod
    def identity(cls):
        """Identity permutation.

        :rtype: :obj:`Permutation`
        """
        return cls(range(ELEMENTS))

    @classmethod
    def from_cycles(cls, cycles):
        """Build from disjoint cycles.

        :raises: ValueError if the cycles overlap or leave the range.
        :param cycles: Iterable of cycles, each a sequence of elements.
        :type cycles: iterable
        :rtype: :obj:`Permutation`
        """
        images = list(range(ELEMENTS))
        seen = set()
        for cycle in cycles:
            for index, element in enumerate(cycle):
                if not 0 <= element < ELEMENTS or element in seen:
                    raise ValueError("Element {} repeated or out of range".format(element))
                seen.add(element)
                images[element] = cycle[(index + 1) % len(cycle)]
        return cls(images)

    @classmethod
    def parse(cls, text):
        """Parse cycle notation or an image list.

        :raises: :obj:`orderfinding.exceptions.ParseError` with the offending column.
        :param text: Permutation text.
        :type text: str
        :rtype: :obj:`Permutation`
        """
        stripped = text.strip()
        if not stripped:
            raise ParseError("Empty permutation", text, 1)
        if stripped.startswith("("):
            return cls._parse_cycles(text)
        return cls._parse_images(text)

    @classmethod
    def _tokens(cls, text):
        position = 0
        while position < len(text):
            if not text[position:].strip():
                return
            match = _TOKEN.match(text, position)
            if match is None:
                column = position + len(text[position:]) - len(text[position:].lstrip()) + 1
                raise ParseError("Unexpected character", text, column)
            column = match.start(match.lastindex) + 1
            yield match.lastindex, match.group(match.lastindex), column
            position = match.end()

    @classmethod
    def _parse_cycles(cls, text):
        cycles = []
        cycle = None
        seen = set()
        column = 1
        for kind, value, column in cls._tokens(text):
            if kind == 1:
                if cycle is not None:
                    raise ParseError("Nested cycle", text, column)
                cycle = []
            elif kind == 2:
                if cycle is None:
                    raise ParseError("Unbalanced ')'", text, column)
                cycles.append(cycle)
                cycle = None
            elif kind == 3:
                if cycle is None:
                    raise ParseError("Element outside a cycle", text, column)
                element = int(value)
                if element >= ELEMENTS:
                    raise ParseError("Element {} out of range".format(element), text, column)
                if element in seen:
                    raise ParseError("Element {} repeated".format(element), text, column)
                seen.add(element)
                cycle.append(element)
            elif cycle is None:
                raise ParseError("Separator outside a cycle", text, column)
        if cycle is not None:
            raise ParseError("Unterminated cycle", text, len(text) + 1)
        return cls.from_cycles(cycles)

    @classmethod
    def _parse_images(cls, text):
        images = []
        expect_number = True
        column = 1
        for kind, value, column in cls._tokens(text):
            if kind == 3 and expect_number:
                images.append(int(value))
                expect_number = False
            elif kind == 4 and not expect_number:
                expect_number = True
            else:
                raise ParseError("Unexpected {!r} in image list".format(value), text, column)
        if expect_number:
            raise ParseError("Image list ends with a separator", text, len(text) + 1)
        if len(images) != ELEMENTS or sorted(images) != list(range(ELEMENTS)):
            raise ParseError("Image list is not a permutation of 0..{}".format(ELEMENTS - 1),
                             text, 1)
        return cls(images)

    def __call__(self, element):
        return self.images[element]

    def compose(self, other):
        """Composition, other applied first.

        :param other: Permutation applied first.
        :type other: :obj:`Permutation`
        :return: self o other.
        :rtype: :obj:`Permutation`
        """
        return Permutation(self.images[image] for image in other.images)

    def power(self, exponent):
        """Self composed exponent times.

        :param exponent: Nonnegative exponent.
        :type exponent: int
        :rtype: :obj:`Permutation`
        """
        assert exponent >= 0, "Exponent must be nonnegative"
        result = Permutation.identity()
        base = self
        while exponent:
            if exponent & 1:
                result = result.compose(base)
            base = base.compose(base)
            exponent >>= 1
        return result

    def order_of(self, element):
        """Length of the cycle containing element.

        :param element: Start element y.
        :type element: int
        :return: Smallest r >= 1 with pi^r(y) = y.
        :rtype: int
        """
        order, current = 1, self(element)
        while current != element:
            current = self(current)
            order += 1
        return order

    def cycles(self):
        """Cycles of length two or more, each starting at its smallest element.

        :rtype: list of tuple
        """
        cycles, seen = [], set()
        for start in range(ELEMENTS):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            current = self(start)
            while current != start:
                cycle.append(current)
                seen.add(current)
                current = self(current)
            if len(cycle) > 1:
                cycles.append(tuple(cycle))
        return cycles

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __str__(self):
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("({})".format(" ".join(str(element) for element in cycle))
                       for cycle in cycles)

    def __repr__(self):
        return "Permutation({!r})".format(str(self))


class OracleSpec:
    """A problem instance: the permutation and the start element y = y1y0."""

    def __init__(self, pi, y):
        """Initialize.

        :raises: :obj:`orderfinding.exceptions.StateError` if y is out of range.
        :param pi: Permutation.
        :type pi: :obj:`Permutation`
        :param y: Start element.
        :type y: int
        """
        if not 0 <= int(y) < ELEMENTS:
            raise StateError("Start element {} out of range 0..{}".format(y, ELEMENTS - 1))
        self.pi = pi
        self.y = int(y)

    @property
    def order(self):
        """Order of pi at y."""
        return self.pi.order_of(self.y)

    def __eq__(self, other):
        return isinstance(other, OracleSpec) and (self.pi, self.y) == (other.pi, other.y)

    def __hash__(self):
        return hash((self.pi, self.y))

    def __repr__(self):
        return "OracleSpec({}, y={})".format(self.pi, self.y)


def all_permutations():
    """All 24 permutations, image lists in lexicographic order.

    :rtype: list of :obj:`Permutation`
    """
    return [Permutation(images) for images in itertools.permutations(range(ELEMENTS))]


def all_instances():
    """Every (pi, y) instance, permutations outermost.

    :rtype: list of :obj:`OracleSpec`
    """
    return [OracleSpec(pi, y) for pi in all_permutations() for y in range(ELEMENTS)]


def order_of(pi, y):
    """Order of pi at y. See :meth:`Permutation.order_of`."""
    return pi.order_of(y)


def power(pi, exponent):
    """pi to a nonnegative power. See :meth:`Permutation.power`."""
    return pi.power(exponent)


def permutation_matrix(sigma):
    """Matrix taking |y> to |sigma(y)> on qubits 4 and 5.

    :param sigma: Permutation.
    :type sigma: :obj:`Permutation`
    :return: 4x4 0/1 matrix with M[sigma(y), y] = 1.
    :rtype: :obj:`numpy.ndarray`
    """
    matrix = np.zeros((ELEMENTS, ELEMENTS), dtype=complex)
    for element in range(ELEMENTS):
        matrix[sigma(element), element] = 1
    return matrix


def oracle_stages(pi):
    """The three controlled stages of the oracle.

    pi is controlled by qubit 3, pi^2 by qubit 2 and pi^4 by qubit 1, so that
    together they map |x>|y> to |x>|pi^x(y)>.

    :param pi: Permutation.
    :type pi: :obj:`Permutation`
    :rtype: list of :obj:`orderfinding.gates.ControlledUnitary`
    """
    return [ControlledUnitary(control, TARGET_QUBITS, permutation_matrix(pi.power(exponent)),
                              label=str(pi.power(exponent)))
            for exponent, control in STAGE_CONTROLS]


def oracle_unitary(pi):
    """Oracle unitary, sum over x of |x><x| (x) P_{pi^x}.

    :param pi: Permutation.
    :type pi: :obj:`Permutation`
    :return: 32x32 permutation matrix.
    :rtype: :obj:`numpy.ndarray`
    """
    return Circuit(oracle_stages(pi)).unitary()

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
"""Native pulse sequences written as text, such as "C24 P34 P54' N3"."""
import logging
import re

from orderfinding.circuit import Circuit
from orderfinding.exceptions import GateError, ParseError
from orderfinding.gates import QUBIT_COUNT, ConditionalZRotation, ControlledNot, NotGate

TIME_ORDER = "time"
PRODUCT_ORDER = "product"
ORDERS = (TIME_ORDER, PRODUCT_ORDER)

_GATE_TOKEN = re.compile(r"^([A-Z]+)(\d+)(['†]?)$")


class NativeGates:
    """Registry of the gate classes a sequence token may name.

    ``C`` is the controlled-NOT, ``P`` the conditional 90 degree z rotation and
    ``N`` the NOT. Other registries are built from a token to class mapping.
    """

    logger = logging.getLogger("NativeGates")

    def __init__(self, gates=None):
        """Create the registry.

        :param gates: Token to gate class mapping, defaults to C, P and N.
        :type gates: dict
        """
        if gates is None:
            gates = {
                ControlledNot.token: ControlledNot,
                ConditionalZRotation.token: ConditionalZRotation,
                NotGate.token: NotGate
            }
        self.__gates = dict(gates)

    def get(self, token, default=None):
        """Gate class for a token.

        :param token: Token prefix.
        :type token: str
        :param default: Returned when the token is unknown.
        :type default: any
        :rtype: type
        """
        return self.__gates.get(token, default)

    def tokens(self):
        """Registered token prefixes.

        :rtype: list of str
        """
        return sorted(self.__gates)

    def build(self, text, column=1):
        """Build a gate from one token.

        :raises: :obj:`orderfinding.exceptions.ParseError` if the token is malformed.
        :param text: Token such as "C35", "P54'" or "N3".
        :type text: str
        :param column: Column of the token, for error messages.
        :type column: int
        :rtype: :obj:`orderfinding.gates.Gate`
        """
        match = _GATE_TOKEN.match(text)
        if match is None:
            raise ParseError("Malformed gate token", text, column)
        prefix, digits, dagger = match.groups()
        gate = self.get(prefix)
        if gate is None:
            raise ParseError("Unknown gate {!r}, expected one of {}".format(
                prefix, ", ".join(self.tokens())), text, column)
        qubits = [int(digit) for digit in digits]
        try:
            if gate is ConditionalZRotation:
                if len(qubits) != 2:
                    raise GateError("P takes two qubits")
                built = gate(*qubits, angle=90.0, dagger=bool(dagger))
            else:
                if dagger:
                    raise GateError("{} has no dagger form".format(prefix))
                built = gate(*qubits)
        except (GateError, TypeError) as exception:
            raise ParseError(str(exception), text, column) from exception
        self.logger.debug("Token %r -> %r", text, built)
        return built


class NativeSequence:
    """Ordered native gates together with the order the listing is read in.

    In ``time`` order the first listed gate acts first. In ``product`` order
    the listing is an operator product and the rightmost gate acts first.
    """

    def __init__(self, ops=(), order=TIME_ORDER):
        """Initialize.

        :param ops: Gates as listed.
        :type ops: iterable of :obj:`orderfinding.gates.Gate`
        :param order: "time" or "product".
        :type order: str
        """
        if order not in ORDERS:
            raise ValueError("Unknown sequence order {!r}".format(order))
        self.ops = tuple(ops)
        self.order = order

    @classmethod
    def parse(cls, text, order=TIME_ORDER, gates=None):
        """Parse whitespace separated tokens.

        :raises: :obj:`orderfinding.exceptions.ParseError` with the column of the bad token.
        :param text: Sequence text.
        :type text: str
        :param order: "time" or "product".
        :type order: str
        :param gates: Token registry.
        :type gates: :obj:`NativeGates`
        :rtype: :obj:`NativeSequence`
        """
        if gates is None:
            gates = NativeGates()
        ops = [gates.build(match.group(), match.start() + 1)
               for match in re.finditer(r"\S+", text)]
        return cls(ops, order)

    def gates(self):
        """Gates in the order they act.

        :rtype: tuple
        """
        if self.order == PRODUCT_ORDER:
            return tuple(reversed(self.ops))
        return self.ops

    def circuit(self, qubit_count=QUBIT_COUNT):
        """Sequence as a circuit.

        :rtype: :obj:`orderfinding.circuit.Circuit`
        """
        return Circuit(self.gates(), qubit_count)

    def unitary(self, qubit_count=QUBIT_COUNT):
        """Unitary of the sequence.

        :rtype: :obj:`numpy.ndarray`
        """
        return self.circuit(qubit_count).unitary()

    def __len__(self):
        return len(self.ops)

    def __iter__(self):
        return iter(self.ops)

    def __eq__(self, other):
        return (isinstance(other, NativeSequence) and self.ops == other.ops
                and self.order == other.order)

    def __hash__(self):
        return hash((self.ops, self.order))

    def __str__(self):
        return " ".join(str(op) for op in self.ops)

    def __repr__(self):
        return "NativeSequence({!r}, order={!r})".format(str(self), self.order)


def native_sequence_unitary(seq, qubit_count=QUBIT_COUNT):
    """Unitary of a native sequence, honouring its order.

    :param seq: Sequence.
    :type seq: :obj:`NativeSequence`
    :rtype: :obj:`numpy.ndarray`
    """
    return seq.unitary(qubit_count)

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
"""Circuits and dense simulation."""
import logging

import numpy as np

from orderfinding.gates import QUBIT_COUNT
from orderfinding.state import QuantumState

LOGGER = logging.getLogger("Circuit")


class Circuit:
    """Ordered list of gates on the register, first gate acting first."""

    logger = LOGGER

    def __init__(self, ops=(), qubit_count=QUBIT_COUNT):
        """Initialize.

        :raises: :obj:`orderfinding.exceptions.GateError` if a gate does not fit the register.
        :param ops: Gates in time order.
        :type ops: iterable of :obj:`orderfinding.gates.Gate`
        :param qubit_count: Register size.
        :type qubit_count: int
        """
        self.qubit_count = qubit_count
        self.ops = tuple(ops)
        for op in self.ops:
            op.validate(qubit_count)

    def __add__(self, other):
        assert self.qubit_count == other.qubit_count, "Circuits on different registers"
        return Circuit(self.ops + other.ops, self.qubit_count)

    def __iter__(self):
        return iter(self.ops)

    def __len__(self):
        return len(self.ops)

    def __repr__(self):
        return "Circuit({})".format(" ".join(str(op) for op in self.ops))

    def apply(self, state):
        """Run the circuit on a state.

        :param state: Input state.
        :type state: :obj:`orderfinding.state.QuantumState`
        :return: Output state.
        :rtype: :obj:`orderfinding.state.QuantumState`
        """
        for op in self.ops:
            state = apply_gate(state, op)
        return state

    def unitary(self):
        """Product of the gate unitaries, the first gate rightmost.

        :return: Square unitary of size 2**qubit_count.
        :rtype: :obj:`numpy.ndarray`
        """
        matrix = np.eye(2 ** self.qubit_count, dtype=complex)
        for op in self.ops:
            matrix = op.apply(matrix, self.qubit_count)
        self.logger.debug("Unitary of %r computed", self)
        return matrix


def apply_gate(state, op):
    """Apply a single gate to a state.

    :raises: :obj:`orderfinding.exceptions.GateError` on a qubit index out of range.
    :param state: Input state.
    :type state: :obj:`orderfinding.state.QuantumState`
    :param op: Gate.
    :type op: :obj:`orderfinding.gates.Gate`
    :return: Output state.
    :rtype: :obj:`orderfinding.state.QuantumState`
    """
    return QuantumState(op.apply(state.amplitudes, state.qubit_count))


def circuit_unitary(circuit):
    """Unitary of a circuit.

    :param circuit: Circuit.
    :type circuit: :obj:`Circuit`
    :return: Square unitary.
    :rtype: :obj:`numpy.ndarray`
    """
    return circuit.unitary()

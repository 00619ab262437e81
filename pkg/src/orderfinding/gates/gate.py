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
"""Base gate."""
import numpy as np

from orderfinding.exceptions import GateError

QUBIT_COUNT = 5


class Gate:
    """Base gate class.

    A gate acts on an ordered tuple of qubits (1-based). Its local matrix is
    written with the first listed qubit as the most significant bit, the same
    convention the register uses for qubit 1.
    """

    token = None

    def __init__(self, *qubits):
        """Initialize.

        :param qubits: Qubits, 1-based, that this gate is acting on.
        :type qubits: int
        """
        self.qubits = tuple(int(qubit) for qubit in qubits)
        if len(set(self.qubits)) != len(self.qubits):
            raise GateError("Gate {} acts on repeated qubits {}".format(
                type(self).__name__, self.qubits))
        for qubit in self.qubits:
            if qubit < 1:
                raise GateError("Qubit index {} out of range".format(qubit))

    def matrix(self):
        """Local unitary on :attr:`qubits`.

        Implement this.
        """
        raise NotImplementedError

    def validate(self, qubit_count=QUBIT_COUNT):
        """Check that every qubit index fits a register of qubit_count qubits.

        :raises: :obj:`orderfinding.exceptions.GateError` on a bad index.
        :param qubit_count: Register size.
        :type qubit_count: int
        """
        for qubit in self.qubits:
            if not 1 <= qubit <= qubit_count:
                raise GateError("Qubit index {} out of range 1..{} in {}".format(
                    qubit, qubit_count, self))

    def apply(self, amplitudes, qubit_count=QUBIT_COUNT):
        """Apply this gate to a vector or to the rows of a matrix.

        :param amplitudes: Array whose leading axis has length 2**qubit_count.
        :type amplitudes: :obj:`numpy.ndarray`
        :param qubit_count: Register size.
        :type qubit_count: int
        :return: New array of the same shape.
        :rtype: :obj:`numpy.ndarray`
        """
        self.validate(qubit_count)
        amplitudes = np.asarray(amplitudes, dtype=complex)
        axes = [qubit - 1 for qubit in self.qubits]
        front = list(range(len(axes)))
        tensor = amplitudes.reshape([2] * qubit_count + list(amplitudes.shape[1:]))
        tensor = np.moveaxis(tensor, axes, front)
        shape = tensor.shape
        tensor = (self.matrix() @ tensor.reshape(2 ** len(axes), -1)).reshape(shape)
        return np.moveaxis(tensor, front, axes).reshape(amplitudes.shape)

    def unitary(self, qubit_count=QUBIT_COUNT):
        """Full register unitary of this gate.

        :param qubit_count: Register size.
        :type qubit_count: int
        :return: 2**qubit_count square unitary.
        :rtype: :obj:`numpy.ndarray`
        """
        return self.apply(np.eye(2 ** qubit_count, dtype=complex), qubit_count)

    def _key(self):
        return (type(self).__name__, self.qubits)

    def __eq__(self, other):
        return isinstance(other, Gate) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return "{}{}".format(type(self).__name__, self.qubits)

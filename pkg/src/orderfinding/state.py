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
"""State vectors and density operators of the spin register."""
import numpy as np

from orderfinding.exceptions import StateError
from orderfinding.gates import QUBIT_COUNT

TOLERANCE = 1e-12


def bit(index, qubit, qubit_count=QUBIT_COUNT):
    """Bit of a basis index on a qubit, qubit 1 being the most significant.

    :param index: Basis index.
    :type index: int
    :param qubit: 1-based qubit.
    :type qubit: int
    :param qubit_count: Register size.
    :type qubit_count: int
    :return: 0 or 1.
    :rtype: int
    """
    return (index >> (qubit_count - qubit)) & 1


def _qubit_count(dimension):
    qubit_count = int(dimension).bit_length() - 1
    if qubit_count < 1 or 2 ** qubit_count != dimension:
        raise StateError("Dimension {} is not a power of two".format(dimension))
    return qubit_count


class QuantumState:
    """Pure state of the register.

    Amplitudes are indexed by the basis label b1b2...bn read as a binary
    number, qubit 1 being the most significant bit.
    """

    def __init__(self, amplitudes):
        """Initialize.

        :raises: :obj:`orderfinding.exceptions.StateError` if the vector is not normalized.
        :param amplitudes: Complex amplitudes, length 2**n.
        :type amplitudes: sequence
        """
        amplitudes = np.array(amplitudes, dtype=complex).reshape(-1)
        self.qubit_count = _qubit_count(amplitudes.size)
        norm = np.vdot(amplitudes, amplitudes).real
        if abs(norm - 1) > TOLERANCE:
            raise StateError("State norm {!r} differs from 1".format(norm))
        amplitudes.setflags(write=False)
        self.amplitudes = amplitudes

    @classmethod
    def basis(cls, label, qubit_count=QUBIT_COUNT):
        """Computational basis state.

        :param label: Bit string such as "00011" or a basis index.
        :type label: str or int
        :param qubit_count: Register size, used when label is an index.
        :type qubit_count: int
        :return: Basis state.
        :rtype: :obj:`QuantumState`
        """
        if isinstance(label, str):
            if not label or set(label) - {"0", "1"}:
                raise StateError("Invalid basis label {!r}".format(label))
            qubit_count = len(label)
            label = int(label, 2)
        if not 0 <= label < 2 ** qubit_count:
            raise StateError("Basis index {} out of range".format(label))
        amplitudes = np.zeros(2 ** qubit_count, dtype=complex)
        amplitudes[label] = 1
        return cls(amplitudes)

    def evolve(self, unitary):
        """State after a unitary.

        :param unitary: Square matrix on the register.
        :type unitary: :obj:`numpy.ndarray`
        :return: New state.
        :rtype: :obj:`QuantumState`
        """
        return QuantumState(unitary @ self.amplitudes)

    def probabilities(self):
        """Born probabilities of the basis states.

        :return: Array of 2**n probabilities.
        :rtype: :obj:`numpy.ndarray`
        """
        return np.abs(self.amplitudes) ** 2

    def __len__(self):
        return self.amplitudes.size

    def __repr__(self):
        return "QuantumState(qubit_count={})".format(self.qubit_count)


class DensityOperator:
    """Density operator of the register.

    A ``normalized`` operator has unit trace. A ``deviation`` operator is the
    traceless part, in arbitrary units, which is all an ensemble measurement
    sees.
    """

    NORMALIZED = "normalized"
    DEVIATION = "deviation"

    def __init__(self, entries, kind=NORMALIZED):
        """Initialize.

        :raises: :obj:`orderfinding.exceptions.StateError` on a non-Hermitian matrix
                 or the wrong trace for the kind.
        :param entries: Square complex matrix.
        :type entries: :obj:`numpy.ndarray`
        :param kind: "normalized" or "deviation".
        :type kind: str
        """
        entries = np.array(entries, dtype=complex)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise StateError("Density operator must be a square matrix")
        if kind not in (self.NORMALIZED, self.DEVIATION):
            raise StateError("Unknown density operator kind {!r}".format(kind))
        self.qubit_count = _qubit_count(entries.shape[0])
        scale = max(1.0, float(np.max(np.abs(entries))))
        if not np.allclose(entries, entries.conj().T, rtol=0, atol=TOLERANCE * scale):
            raise StateError("Density operator is not Hermitian")
        trace = np.trace(entries)
        expected = 1.0 if kind == self.NORMALIZED else 0.0
        if abs(trace - expected) > TOLERANCE * scale * entries.shape[0]:
            raise StateError("Trace {!r} invalid for a {} operator".format(trace, kind))
        entries.setflags(write=False)
        self.entries = entries
        self.kind = kind

    @classmethod
    def from_state(cls, state):
        """Projector onto a pure state.

        :param state: Pure state.
        :type state: :obj:`QuantumState`
        :return: Normalized density operator.
        :rtype: :obj:`DensityOperator`
        """
        return cls(np.outer(state.amplitudes, state.amplitudes.conj()))

    @classmethod
    def maximally_mixed(cls, qubit_count=QUBIT_COUNT):
        """Identity over the dimension.

        :param qubit_count: Register size.
        :type qubit_count: int
        :return: Normalized density operator.
        :rtype: :obj:`DensityOperator`
        """
        dimension = 2 ** qubit_count
        return cls(np.eye(dimension, dtype=complex) / dimension)

    def conjugated(self, unitary):
        """U rho U^dagger.

        :param unitary: Square unitary on the register.
        :type unitary: :obj:`numpy.ndarray`
        :return: Density operator of the same kind.
        :rtype: :obj:`DensityOperator`
        """
        return DensityOperator(unitary @ self.entries @ unitary.conj().T, self.kind)

    def populations(self):
        """Diagonal of the operator.

        :return: Real array of length 2**n.
        :rtype: :obj:`numpy.ndarray`
        """
        return np.diagonal(self.entries).real.copy()

    def expectation_iz(self, qubit):
        """Ensemble observable O_i = 2 Tr(rho I_zi), with I_z|0> = +1/2 |0>.

        For a deviation operator the value is in the operator's own units.

        :raises: :obj:`orderfinding.exceptions.StateError` on a bad qubit index.
        :param qubit: 1-based qubit.
        :type qubit: int
        :return: O_i.
        :rtype: float
        """
        if not 1 <= qubit <= self.qubit_count:
            raise StateError("Qubit index {} out of range 1..{}".format(qubit, self.qubit_count))
        indices = np.arange(2 ** self.qubit_count)
        signs = 1 - 2 * ((indices >> (self.qubit_count - qubit)) & 1)
        return float(np.dot(signs, self.populations()))

    def __add__(self, other):
        return DensityOperator(self.entries + other.entries, self.kind)

    def __mul__(self, factor):
        return DensityOperator(self.entries * factor, self.kind)

    __rmul__ = __mul__

    def __repr__(self):
        return "DensityOperator(qubit_count={}, kind={!r})".format(self.qubit_count, self.kind)


def expectation_iz(rho, qubit):
    """O_i of one qubit. See :meth:`DensityOperator.expectation_iz`.

    :rtype: float
    """
    return rho.expectation_iz(qubit)

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
"""The order-finding circuit, its Fourier transform and native oracle sequences."""
import logging

import numpy as np

from orderfinding.circuit import Circuit
from orderfinding.gates import ConditionalZRotation, ControlledNot, Hadamard
from orderfinding.native import NativeSequence, PRODUCT_ORDER
from orderfinding.permutations import ELEMENTS, all_instances, oracle_stages
from orderfinding.state import QuantumState

LOGGER = logging.getLogger(__name__)

REGISTER_QUBITS = (1, 2, 3)
EXPONENTS = 2 ** len(REGISTER_QUBITS)
VERIFY_TOLERANCE = 1e-9

# Oracle sequences of the published spectra, listed as operator products.
REFERENCE_ORACLE_SEQUENCES = {
    "a": NativeSequence.parse("P54 C35 P54' C35 P34", PRODUCT_ORDER),
    "b": NativeSequence.parse("C35", PRODUCT_ORDER),
    "c": NativeSequence.parse("C32 C25 C32 C21 P14 C51 P14' C51 P54 C21 P15 C41 P15' C41 P45",
                              PRODUCT_ORDER),
    "d": NativeSequence.parse("C24 P34 P54 C35 P54", PRODUCT_ORDER),
}


def build_qft3(include_final_swap=False):
    """Three qubit Fourier transform on qubits 1 to 3.

    Without the final swap the output comes out bit reversed: the result bit
    that the textbook transform puts on qubit 1 lands on qubit 3.

    :param include_final_swap: Append the 1 <-> 3 swap, as three CNOTs.
    :type include_final_swap: bool
    :rtype: :obj:`orderfinding.circuit.Circuit`
    """
    ops = [
        Hadamard(1),
        ConditionalZRotation(2, 1, 90),
        ConditionalZRotation(3, 1, 45),
        Hadamard(2),
        ConditionalZRotation(3, 2, 90),
        Hadamard(3),
    ]
    if include_final_swap:
        ops += [ControlledNot(1, 3), ControlledNot(3, 1), ControlledNot(1, 3)]
    return Circuit(ops)


def prepare_input(y):
    """Input state |000>|y1 y0>.

    :param y: Start element.
    :type y: int
    :rtype: :obj:`orderfinding.state.QuantumState`
    """
    return QuantumState.basis(int(y))


def build_orderfinding(spec):
    """Hadamards on the first register, the oracle, then the unswapped transform.

    The circuit expects :func:`prepare_input` as its input.

    :param spec: Problem instance.
    :type spec: :obj:`orderfinding.permutations.OracleSpec`
    :rtype: :obj:`orderfinding.circuit.Circuit`
    """
    hadamards = Circuit(Hadamard(qubit) for qubit in REGISTER_QUBITS)
    return hadamards + Circuit(oracle_stages(spec.pi)) + build_qft3(False)


def expected_oracle_output(pi, y):
    """(1/sqrt 8) sum over x of |x>|pi^x(y)>.

    :rtype: :obj:`numpy.ndarray`
    """
    amplitudes = np.zeros(EXPONENTS * ELEMENTS, dtype=complex)
    for exponent in range(EXPONENTS):
        amplitudes[exponent * ELEMENTS + pi.power(exponent)(y)] = 1
    return amplitudes / np.sqrt(EXPONENTS)


def uniform_input(y):
    """(H (x) H (x) H |000>) (x) |y>.

    :rtype: :obj:`numpy.ndarray`
    """
    amplitudes = np.zeros(EXPONENTS * ELEMENTS, dtype=complex)
    amplitudes[np.arange(EXPONENTS) * ELEMENTS + y] = 1
    return amplitudes / np.sqrt(EXPONENTS)


def agrees_up_to_phase(actual, expected, tolerance=VERIFY_TOLERANCE):
    """Whether two vectors agree amplitude-wise up to one global phase.

    :rtype: bool
    """
    pivot = int(np.argmax(np.abs(expected)))
    if abs(actual[pivot]) < tolerance:
        return False
    phase = actual[pivot] / expected[pivot]
    if abs(abs(phase) - 1) > tolerance:
        return False
    return bool(np.allclose(actual, phase * expected, rtol=0, atol=tolerance))


def verify_oracle_sequence(seq, pi, y):
    """Whether a native sequence realizes |x>|y> -> |x>|pi^x(y)> on the uniform input.

    Only the physically relevant input is checked, the first register in
    uniform superposition and the second in |y>, up to a global phase.

    :param seq: Native sequence.
    :type seq: :obj:`orderfinding.native.NativeSequence`
    :param pi: Permutation.
    :type pi: :obj:`orderfinding.permutations.Permutation`
    :param y: Start element.
    :type y: int
    :rtype: bool
    """
    actual = seq.unitary() @ uniform_input(y)
    return agrees_up_to_phase(actual, expected_oracle_output(pi, y))


def search_sequence_instances(seq):
    """Every (pi, y) a native sequence realizes.

    :param seq: Native sequence.
    :type seq: :obj:`orderfinding.native.NativeSequence`
    :return: Matching instances, permutations in lexicographic order.
    :rtype: list of :obj:`orderfinding.permutations.OracleSpec`
    """
    unitary = seq.unitary()
    matches = []
    for spec in all_instances():
        actual = unitary @ uniform_input(spec.y)
        if agrees_up_to_phase(actual, expected_oracle_output(spec.pi, spec.y)):
            matches.append(spec)
    LOGGER.info("%r realizes %d instance(s)", seq, len(matches))
    return matches


def final_state(spec):
    """Register state after the order-finding circuit.

    :param spec: Problem instance.
    :type spec: :obj:`orderfinding.permutations.OracleSpec`
    :rtype: :obj:`orderfinding.state.QuantumState`
    """
    return build_orderfinding(spec).apply(prepare_input(spec.y))


def dft_matrix(bit_reversed=False):
    """Eight point DFT on qubits 1 to 3, identity on qubits 4 and 5.

    Entry (k, j) of the DFT is omega^(jk)/sqrt(8) with omega = exp(2 pi i / 8).
    With bit_reversed the output index k is written in reversed bit order.

    :rtype: :obj:`numpy.ndarray`
    """
    indices = np.arange(EXPONENTS)
    dft = np.exp(2j * np.pi * np.outer(indices, indices) / EXPONENTS) / np.sqrt(EXPONENTS)
    if bit_reversed:
        width = len(REGISTER_QUBITS)
        order = [int(format(index, "0{}b".format(width))[::-1], 2) for index in indices]
        reversed_dft = np.zeros_like(dft)
        reversed_dft[order, :] = dft
        dft = reversed_dft
    return np.kron(dft, np.eye(ELEMENTS))

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
"""Order-finding circuit tests."""
import numpy as np
import pytest
from numpy.testing import assert_allclose

from orderfinding.circuits import (REFERENCE_ORACLE_SEQUENCES, build_orderfinding, build_qft3,
                                   dft_matrix, final_state, search_sequence_instances,
                                   verify_oracle_sequence)
from orderfinding.native import NativeSequence
from orderfinding.permutations import OracleSpec, Permutation, all_permutations
from orderfinding.state import QuantumState

from helpers import instance


def test_qft_with_swap_is_dft():
    """With the final swap the transform is the textbook DFT."""
    assert_allclose(build_qft3(True).unitary(), dft_matrix(), atol=1e-12)


def test_qft_without_swap_is_bit_reversed():
    """Without the swap the output index comes out bit reversed."""
    assert_allclose(build_qft3(False).unitary(), dft_matrix(bit_reversed=True), atol=1e-12)


def test_qft_of_zero_is_uniform():
    """|000> goes to the uniform superposition."""
    state = build_qft3(True).apply(QuantumState.basis("00000"))
    expected = np.zeros(32)
    expected[np.arange(8) * 4] = 1 / np.sqrt(8)
    assert_allclose(state.amplitudes, expected, atol=1e-12)


def test_circuit_layout():
    """Three Hadamards, three oracle stages and six transform gates."""
    assert len(build_orderfinding(instance(2))) == 12


def test_identity_returns_to_ground_state():
    """With pi the identity the register comes back to |00000>."""
    assert_allclose(final_state(instance(1)).amplitudes, np.eye(32)[0], atol=1e-12)


def test_order_two_register():
    """For r = 2 the first register holds 0 or 4 with equal weight."""
    probabilities = final_state(instance(2)).probabilities().reshape(8, 4).sum(axis=1)
    expected = np.zeros(8)
    expected[[0, 1]] = 0.5
    # m = 4 sits on qubit 3, which is the register's least significant bit
    assert_allclose(probabilities, expected, atol=1e-12)


def test_empty_sequence_realizes_identity():
    """No gates realize the identity for every y."""
    for y in range(4):
        assert verify_oracle_sequence(NativeSequence(), Permutation.identity(), y)


def test_single_cnot_realizes_swap():
    """C35 flips y0 with x0, the oracle of (0 1)(2 3)."""
    sequence = REFERENCE_ORACLE_SEQUENCES["b"]
    for y in range(4):
        assert verify_oracle_sequence(sequence, Permutation.parse("(0 1)(2 3)"), y)
    assert not verify_oracle_sequence(sequence, Permutation.parse("(0 1 2 3)"), 0)


@pytest.mark.parametrize("y", [0, 1, 2])
def test_phase_sequence_is_identity_on_fixed_points(y):
    """The phase-only panel acts as an identity oracle for y = 0, 1 and 2."""
    sequence = REFERENCE_ORACLE_SEQUENCES["a"]
    for pi in all_permutations():
        if pi(y) == y:
            assert verify_oracle_sequence(sequence, pi, y)


def test_phase_sequence_fails_at_three():
    """For y = 3 the phase panel leaves a relative phase."""
    assert not verify_oracle_sequence(REFERENCE_ORACLE_SEQUENCES["a"], Permutation.identity(), 3)


def test_four_cycle_sequence():
    """The four-cycle panel realizes (0 1 2 3) from y = 0 only as a product."""
    product = REFERENCE_ORACLE_SEQUENCES["d"]
    matches = search_sequence_instances(product)
    assert OracleSpec(Permutation.parse("(0 1 2 3)"), 0) in matches
    assert all(spec.order == 4 for spec in matches)
    time = NativeSequence(product.ops, "time")
    assert search_sequence_instances(time) == []


def test_sequence_without_spin_four_flip():
    """A sequence that never flips spin 4 realizes no instance at all."""
    assert search_sequence_instances(REFERENCE_ORACLE_SEQUENCES["c"]) == []


class Rephased:
    """Sequence whose unitary is followed by a diagonal phase."""

    def __init__(self, sequence, phases):
        self.sequence = sequence
        self.phases = np.asarray(phases, dtype=complex)

    def unitary(self):
        return np.diag(self.phases) @ self.sequence.unitary()


@pytest.mark.parametrize("angle", [0.0, 0.7, np.pi, -2.1])
def test_global_phase_is_ignored(angle):
    """A global phase on the four-cycle panel keeps the verdict."""
    phased = Rephased(REFERENCE_ORACLE_SEQUENCES["d"], np.full(32, np.exp(1j * angle)))
    assert verify_oracle_sequence(phased, Permutation.parse("(0 1 2 3)"), 0)


@pytest.mark.parametrize("phase", [-1, 1j, np.exp(0.1j)])
def test_relative_phase_is_rejected(phase):
    """A phase on the odd exponents only is a relative phase and fails."""
    phases = np.ones(32, dtype=complex)
    phases[[index for index in range(32) if index // 4 % 2]] = phase
    phased = Rephased(REFERENCE_ORACLE_SEQUENCES["d"], phases)
    assert not verify_oracle_sequence(phased, Permutation.parse("(0 1 2 3)"), 0)

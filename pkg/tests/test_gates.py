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
"""Gate tests."""
import numpy as np
import pytest
from numpy.testing import assert_allclose

from orderfinding.circuit import apply_gate
from orderfinding.exceptions import GateError
from orderfinding.gates import (ConditionalZRotation, ControlledNot, ControlledUnitary,
                                Hadamard, NotGate, YRotation, ZRotation)
from orderfinding.state import QuantumState


def test_hadamard_on_ground_state():
    """Hadamard on qubit 1 splits |00000> into |00000> and |10000>."""
    state = apply_gate(QuantumState.basis("00000"), Hadamard(1))
    expected = np.zeros(32)
    expected[0b00000] = expected[0b10000] = 1 / np.sqrt(2)
    assert_allclose(state.amplitudes, expected, atol=1e-12)


def test_controlled_not_flips_target_when_control_set():
    """C_12 takes |11000> to |10000>."""
    state = apply_gate(QuantumState.basis("11000"), ControlledNot(1, 2))
    assert_allclose(state.amplitudes, QuantumState.basis("10000").amplitudes, atol=1e-12)


def test_controlled_not_leaves_target_when_control_clear():
    """C_12 leaves |01000> alone."""
    state = apply_gate(QuantumState.basis("01000"), ControlledNot(1, 2))
    assert_allclose(state.amplitudes, QuantumState.basis("01000").amplitudes, atol=1e-12)


def test_conditional_rotation_phase():
    """A 90 degree conditional rotation multiplies |00011> by i."""
    state = apply_gate(QuantumState.basis("00011"), ConditionalZRotation(4, 5, 90))
    assert_allclose(state.amplitudes, 1j * QuantumState.basis("00011").amplitudes, atol=1e-12)


def test_conditional_rotation_dagger_conjugates():
    """The dagger form applies -i."""
    state = apply_gate(QuantumState.basis("00011"), ConditionalZRotation(4, 5, 90, dagger=True))
    assert_allclose(state.amplitudes[3], -1j, atol=1e-12)


def test_conditional_rotation_is_symmetric():
    """Control and target can be exchanged."""
    assert_allclose(ConditionalZRotation(2, 4, 45).unitary(),
                    ConditionalZRotation(4, 2, 45).unitary(), atol=1e-12)


def test_z_rotation_phase():
    """Z rotation applies exp(i angle) to |1>."""
    state = apply_gate(QuantumState.basis("00100"), ZRotation(3, 180))
    assert_allclose(state.amplitudes[0b00100], -1, atol=1e-12)


def test_not_gate():
    """N_3 flips spin 3."""
    state = apply_gate(QuantumState.basis("00000"), NotGate(3))
    assert_allclose(state.amplitudes, QuantumState.basis("00100").amplitudes, atol=1e-12)


def test_y_rotation_takes_zero_to_plus():
    """A 90 degree y rotation takes |0> to (|0> + |1>)/sqrt(2)."""
    state = apply_gate(QuantumState.basis("00000"), YRotation(1))
    assert_allclose(state.amplitudes[[0, 16]], [1 / np.sqrt(2)] * 2, atol=1e-12)


def test_controlled_unitary_acts_on_targets():
    """A controlled swap of |y> values acts only when the control is set."""
    swap = np.eye(4)[[1, 0, 2, 3]]
    gate = ControlledUnitary(3, (4, 5), swap)
    assert_allclose(apply_gate(QuantumState.basis("00100"), gate).amplitudes,
                    QuantumState.basis("00101").amplitudes, atol=1e-12)
    assert_allclose(apply_gate(QuantumState.basis("00000"), gate).amplitudes,
                    QuantumState.basis("00000").amplitudes, atol=1e-12)


def test_controlled_unitary_rejects_non_unitary():
    """A non-unitary block is refused."""
    with pytest.raises(GateError):
        ControlledUnitary(1, (4, 5), np.ones((4, 4)))


def test_controlled_unitary_rejects_wrong_size():
    """The block must match the number of targets."""
    with pytest.raises(GateError):
        ControlledUnitary(1, (4, 5), np.eye(2))


@pytest.mark.parametrize("factory", [
    lambda: Hadamard(0),
    lambda: ControlledNot(2, 2),
    lambda: ConditionalZRotation(3, 3, 90),
])
def test_invalid_qubits(factory):
    """Repeated or nonpositive qubits are refused."""
    with pytest.raises(GateError):
        factory()


def test_qubit_out_of_register():
    """A gate beyond the register fails when applied."""
    with pytest.raises(GateError):
        apply_gate(QuantumState.basis("00000"), Hadamard(6))


def test_gate_equality():
    """Gates compare by type, qubits and parameters."""
    assert ControlledNot(1, 2) == ControlledNot(1, 2)
    assert ControlledNot(1, 2) != ControlledNot(2, 1)
    assert ConditionalZRotation(1, 2, 90) != ConditionalZRotation(1, 2, 90, dagger=True)
    assert len({NotGate(1), NotGate(1), NotGate(2)}) == 2


def test_gate_text():
    """Gates print in the native token form."""
    assert str(ControlledNot(3, 5)) == "C35"
    assert str(ConditionalZRotation(5, 4, 90, dagger=True)) == "P54'"
    assert str(NotGate(3)) == "N3"

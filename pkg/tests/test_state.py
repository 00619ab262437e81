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
"""State, density operator and circuit tests."""
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from numpy.testing import assert_allclose

from orderfinding.circuit import Circuit
from orderfinding.exceptions import GateError, StateError
from orderfinding.gates import ControlledNot, Hadamard, NotGate
from orderfinding.state import DensityOperator, QuantumState, bit, expectation_iz

from helpers import gates, states


def test_basis_label_and_index_agree():
    """A label and its binary index give the same state."""
    assert_allclose(QuantumState.basis("10010").amplitudes,
                    QuantumState.basis(0b10010).amplitudes)


def test_bit_reads_qubit_one_as_msb():
    """Qubit 1 is the most significant bit."""
    assert bit(0b10000, 1) == 1
    assert bit(0b10000, 5) == 0
    assert bit(0b00001, 5) == 1


def test_unnormalized_state_is_refused():
    """States must have unit norm."""
    with pytest.raises(StateError):
        QuantumState(np.ones(32))


@pytest.mark.parametrize("label", ["", "0120", "2"])
def test_invalid_basis_label(label):
    """Only nonempty bit strings are basis labels."""
    with pytest.raises(StateError):
        QuantumState.basis(label)


def test_non_hermitian_density_operator():
    """Density operators must be Hermitian."""
    entries = np.eye(2, dtype=complex) / 2
    entries[0, 1] = 0.1
    with pytest.raises(StateError):
        DensityOperator(entries)


def test_deviation_operator_must_be_traceless():
    """A deviation operator has zero trace."""
    with pytest.raises(StateError):
        DensityOperator(np.eye(4), kind="deviation")


def test_expectation_of_ground_state():
    """Every spin of |00000> is up."""
    rho = DensityOperator.from_state(QuantumState.basis("00000"))
    assert [rho.expectation_iz(qubit) for qubit in range(1, 6)] == pytest.approx([1] * 5)


def test_expectation_of_flipped_spin():
    """|00100> has spin 3 down."""
    rho = DensityOperator.from_state(QuantumState.basis("00100"))
    assert expectation_iz(rho, 3) == pytest.approx(-1)
    assert rho.expectation_iz(2) == pytest.approx(1)


def test_maximally_mixed_has_no_polarization():
    """The identity carries no observable."""
    rho = DensityOperator.maximally_mixed()
    assert [rho.expectation_iz(qubit) for qubit in range(1, 6)] == pytest.approx([0] * 5)


def test_expectation_bad_qubit():
    """Qubit 6 is outside the register."""
    with pytest.raises(StateError):
        DensityOperator.maximally_mixed().expectation_iz(6)


def test_scaling_keeps_kind():
    """Scaling a deviation operator stays a deviation operator."""
    deviation = DensityOperator(np.diag([1, -1]), kind="deviation")
    assert (3 * deviation).kind == "deviation"
    assert_allclose((deviation * 2).entries, np.diag([2, -2]))


def test_circuit_runs_gates_in_order():
    """H then C_12 on |00000> gives a Bell pair on qubits 1 and 2."""
    state = Circuit([Hadamard(1), ControlledNot(1, 2)]).apply(QuantumState.basis("00000"))
    expected = np.zeros(32)
    expected[0b00000] = expected[0b11000] = 1 / np.sqrt(2)
    assert_allclose(state.amplitudes, expected, atol=1e-12)


def test_circuit_rejects_gate_outside_register():
    """Gates are validated against the register size."""
    with pytest.raises(GateError):
        Circuit([NotGate(4)], qubit_count=3)


def test_empty_circuit_is_identity():
    """No gates, no change."""
    assert_allclose(Circuit().unitary(), np.eye(32))


@settings(max_examples=40, deadline=None)
@given(st.lists(gates(), max_size=100))
def test_circuit_unitary_is_unitary(ops):
    """Any gate list multiplies out to a unitary."""
    matrix = Circuit(ops).unitary()
    assert_allclose(matrix @ matrix.conj().T, np.eye(32), atol=1e-10)


@settings(max_examples=40, deadline=None)
@given(st.lists(gates(), max_size=20), states())
def test_apply_agrees_with_unitary(ops, amplitudes):
    """Applying gates one by one matches the full unitary."""
    circuit = Circuit(ops)
    state = circuit.apply(QuantumState(amplitudes))
    assert_allclose(state.amplitudes, circuit.unitary() @ amplitudes, atol=1e-10)

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
"""Hypothesis strategies and sample instances shared by the tests."""
import numpy as np
from hypothesis import strategies as st

from orderfinding.gates import (ConditionalZRotation, ControlledNot, Hadamard, NotGate,
                                ZRotation)
from orderfinding.permutations import OracleSpec, Permutation

# One instance of each order, all starting at y = 0.
INSTANCES = {
    1: ("()", 0),
    2: ("(0 1)(2 3)", 0),
    3: ("(0 1 2)", 0),
    4: ("(0 1 2 3)", 0),
}

qubits = st.integers(min_value=1, max_value=5)
angles = st.floats(min_value=-360, max_value=360, allow_nan=False)


@st.composite
def qubit_pairs(draw):
    """Two distinct qubits."""
    first = draw(qubits)
    second = draw(qubits.filter(lambda qubit: qubit != first))
    return first, second


@st.composite
def gates(draw):
    """Any single gate on the five qubit register."""
    kind = draw(st.sampled_from(["H", "N", "Z", "P", "C"]))
    if kind == "H":
        return Hadamard(draw(qubits))
    if kind == "N":
        return NotGate(draw(qubits))
    if kind == "Z":
        return ZRotation(draw(qubits), draw(angles))
    control, target = draw(qubit_pairs())
    if kind == "P":
        return ConditionalZRotation(control, target, draw(angles), draw(st.booleans()))
    return ControlledNot(control, target)


@st.composite
def prep_ops(draw):
    """A controlled-NOT or a NOT."""
    if draw(st.booleans()):
        return ControlledNot(*draw(qubit_pairs()))
    return NotGate(draw(qubits))


@st.composite
def states(draw):
    """Normalized random amplitudes of five qubits."""
    parts = draw(st.lists(st.floats(min_value=-1, max_value=1, allow_nan=False),
                          min_size=64, max_size=64))
    amplitudes = np.array(parts[:32]) + 1j * np.array(parts[32:])
    norm = np.linalg.norm(amplitudes)
    if norm < 1e-3:
        amplitudes = np.zeros(32, dtype=complex)
        amplitudes[0] = 1
        return amplitudes
    return amplitudes / norm


def instance(order):
    """Problem instance with the given order."""
    text, y = INSTANCES[order]
    return OracleSpec(Permutation.parse(text), y)

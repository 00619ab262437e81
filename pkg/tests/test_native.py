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
"""Native sequence tests."""
import numpy as np
import pytest
from numpy.testing import assert_allclose

from orderfinding.exceptions import ParseError
from orderfinding.gates import ConditionalZRotation, ControlledNot, Hadamard, NotGate
from orderfinding.native import NativeGates, NativeSequence


def test_parse_tokens():
    """Tokens become gates in listing order."""
    sequence = NativeSequence.parse("C35 P54' N3")
    assert sequence.ops == (ControlledNot(3, 5), ConditionalZRotation(5, 4, 90, dagger=True),
                            NotGate(3))
    assert str(sequence) == "C35 P54' N3"


def test_dagger_marks_are_equivalent():
    """Both ' and the dagger sign mark the inverse."""
    assert NativeSequence.parse("P54'") == NativeSequence.parse("P54†")


def test_product_order_reverses():
    """In product order the rightmost gate acts first."""
    sequence = NativeSequence.parse("C35 N3", "product")
    assert sequence.gates() == (NotGate(3), ControlledNot(3, 5))
    assert_allclose(sequence.unitary(), NativeSequence.parse("N3 C35").unitary())


def test_sequence_and_inverse_cancel():
    """P54 followed by P54' is the identity."""
    assert_allclose(NativeSequence.parse("P54 P54'").unitary(), np.eye(32), atol=1e-12)


def test_controlled_not_on_basis_state():
    """C35 takes |00100> to |00101>."""
    unitary = NativeSequence.parse("C35").unitary()
    assert_allclose(unitary[:, 0b00100], np.eye(32)[0b00101])


@pytest.mark.parametrize("text, column", [
    ("C35 X12", 5),
    ("C33", 1),
    ("C35 N3'", 5),
    ("P5", 1),
    ("C35 c12", 5),
])
def test_parse_errors(text, column):
    """Bad tokens are reported with their column."""
    with pytest.raises(ParseError) as error:
        NativeSequence.parse(text)
    assert error.value.column == column


def test_registry_extension():
    """A registry built from a mapping takes extra tokens; the default one is unchanged."""
    gates = NativeGates({"H": Hadamard, "N": NotGate})
    assert gates.tokens() == ["H", "N"]
    assert NativeSequence.parse("H1", gates=gates).ops == (Hadamard(1),)
    with pytest.raises(ParseError):
        NativeSequence.parse("H1")


def test_unknown_order():
    """Only time and product order exist."""
    with pytest.raises(ValueError):
        NativeSequence((), "sideways")

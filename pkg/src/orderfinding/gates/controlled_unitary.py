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
"""Controlled target-register unitary."""
import numpy as np

from orderfinding.exceptions import GateError
from .gate import Gate

# pylint:disable=too-few-public-methods

UNITARY_TOLERANCE = 1e-12


class ControlledUnitary(Gate):
    """Apply a unitary on a group of target qubits when the control is |1>.

    The oracle stages use this with a 4x4 permutation matrix on qubits 4 and 5.
    """

    def __init__(self, control, targets, unitary, label=None):
        """Initialize.

        :raises: :obj:`orderfinding.exceptions.GateError` if the block is not unitary.
        :param control: Control qubit.
        :type control: int
        :param targets: Target qubits, the first one being the most significant.
        :type targets: tuple
        :param unitary: Square unitary of size 2**len(targets).
        :type unitary: :obj:`numpy.ndarray`
        :param label: Optional display label.
        :type label: str
        """
        targets = tuple(targets)
        super().__init__(control, *targets)
        self.control = control
        self.targets = targets
        block = np.array(unitary, dtype=complex)
        size = 2 ** len(targets)
        if block.shape != (size, size):
            raise GateError("Block of shape {} does not fit {} target qubits".format(
                block.shape, len(targets)))
        if not np.allclose(block @ block.conj().T, np.eye(size), rtol=0, atol=UNITARY_TOLERANCE):
            raise GateError("Embedded block is not unitary")
        block.setflags(write=False)
        self.block = block
        self.label = label

    def matrix(self):
        """Block diagonal (identity, block) with the control most significant.

        :return: Local unitary.
        :rtype: :obj:`numpy.ndarray`
        """
        size = self.block.shape[0]
        local = np.eye(2 * size, dtype=complex)
        local[size:, size:] = self.block
        return local

    def _key(self):
        return super()._key() + (self.block.tobytes(),)

    def __str__(self):
        return "CU{}->{}[{}]".format(self.control, "".join(str(t) for t in self.targets),
                                     self.label or "U")

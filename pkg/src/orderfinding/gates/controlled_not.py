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
"""Controlled-NOT gate."""
import numpy as np

from .gate import Gate

# pylint:disable=too-few-public-methods

_CNOT = np.array([[1, 0, 0, 0],
                  [0, 1, 0, 0],
                  [0, 0, 0, 1],
                  [0, 0, 1, 0]], dtype=complex)


class ControlledNot(Gate):
    """Controlled-NOT, written C_ij: flips spin j if and only if spin i is |1>.

    Example::

        ControlledNot(1, 2)  # |11000> -> |10000>
    """

    token = "C"

    def __init__(self, control, target):
        """Initialize.

        :param control: Control qubit.
        :type control: int
        :param target: Target qubit.
        :type target: int
        """
        super().__init__(control, target)
        self.control, self.target = self.qubits

    def matrix(self):
        """CNOT with the control as the most significant bit.

        :return: 4x4 permutation matrix.
        :rtype: :obj:`numpy.ndarray`
        """
        return _CNOT

    def __str__(self):
        return "C{}{}".format(self.control, self.target)

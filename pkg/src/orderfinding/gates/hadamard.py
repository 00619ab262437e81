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
"""Hadamard gate."""
import numpy as np

from .gate import Gate

# pylint:disable=too-few-public-methods

_HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)


class Hadamard(Gate):
    """Hadamard on a single qubit.

    Example::

        Hadamard(1)  # |00000> -> (|00000> + |10000>) / sqrt(2)
    """

    def __init__(self, qubit):
        """Initialize.

        :param qubit: Qubit to act on.
        :type qubit: int
        """
        super().__init__(qubit)
        self.qubit = self.qubits[0]

    def matrix(self):
        """Standard 2x2 Hadamard.

        :return: Hadamard matrix.
        :rtype: :obj:`numpy.ndarray`
        """
        return _HADAMARD

    def __str__(self):
        return "H{}".format(self.qubit)

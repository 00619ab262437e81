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
"""Y rotation gate, used as the ideal read-out pulse."""
import numpy as np

from .gate import Gate

# pylint:disable=too-few-public-methods


class YRotation(Gate):
    """Rotation exp(-i*angle*Y/2) about y, angle in degrees.

    A 90 degree rotation takes |0> to (|0> + |1>)/sqrt(2), so a spin in |0>
    reads out as a positive absorptive line.
    """

    def __init__(self, qubit, angle=90.0):
        """Initialize.

        :param qubit: Qubit to rotate.
        :type qubit: int
        :param angle: Rotation angle in degrees.
        :type angle: float
        """
        super().__init__(qubit)
        self.qubit = self.qubits[0]
        self.angle = float(angle)

    def matrix(self):
        """Real rotation matrix.

        :return: 2x2 rotation.
        :rtype: :obj:`numpy.ndarray`
        """
        half = np.deg2rad(self.angle) / 2
        return np.array([[np.cos(half), -np.sin(half)],
                         [np.sin(half), np.cos(half)]], dtype=complex)

    def _key(self):
        return super()._key() + (self.angle,)

    def __str__(self):
        return "Y{}({:g})".format(self.qubit, self.angle)

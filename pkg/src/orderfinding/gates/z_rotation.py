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
"""Z rotation gate."""
import numpy as np

from .gate import Gate

# pylint:disable=too-few-public-methods


class ZRotation(Gate):
    """Phase rotation about z, diag(1, exp(i*angle)), angle in degrees."""

    def __init__(self, qubit, angle):
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
        """Phase matrix.

        :return: diag(1, exp(i*angle)).
        :rtype: :obj:`numpy.ndarray`
        """
        return np.diag([1.0, np.exp(1j * np.deg2rad(self.angle))])

    def _key(self):
        return super()._key() + (self.angle,)

    def __str__(self):
        return "Z{}({:g})".format(self.qubit, self.angle)

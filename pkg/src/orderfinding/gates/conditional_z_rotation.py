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
"""Conditional z rotation gate."""
import numpy as np

from .gate import Gate

# pylint:disable=too-few-public-methods


class ConditionalZRotation(Gate):
    """Phase exp(i*angle) on the target when the control is |1>.

    The matrix is diag(1, 1, 1, exp(i*angle)), so control and target play
    symmetric roles. With dagger=True the phase is conjugated. At 90 degrees
    this is the native P_ij (P_ij' for the dagger); at 90 and 45 degrees it is
    the controlled phase of the Fourier transform.

    Example::

        ConditionalZRotation(4, 5, 90)  # |00011> -> i|00011>
    """

    token = "P"

    def __init__(self, control, target, angle=90.0, dagger=False):
        """Initialize.

        :param control: Control qubit.
        :type control: int
        :param target: Target qubit.
        :type target: int
        :param angle: Rotation angle in degrees.
        :type angle: float
        :param dagger: Conjugate the phase.
        :type dagger: bool
        """
        super().__init__(control, target)
        self.control, self.target = self.qubits
        self.angle = float(angle)
        self.dagger = bool(dagger)

    def phase(self):
        """Phase factor applied to |11>.

        :return: exp(+-i*angle).
        :rtype: complex
        """
        sign = -1 if self.dagger else 1
        return np.exp(sign * 1j * np.deg2rad(self.angle))

    def matrix(self):
        """Diagonal phase matrix.

        :return: diag(1, 1, 1, phase).
        :rtype: :obj:`numpy.ndarray`
        """
        return np.diag([1.0, 1.0, 1.0, self.phase()])

    def _key(self):
        return super()._key() + (self.angle, self.dagger)

    def __str__(self):
        if self.angle == 90.0:
            return "P{}{}{}".format(self.control, self.target, "'" if self.dagger else "")
        return "CZ{}{}({:g}{})".format(self.control, self.target, self.angle,
                                      "'" if self.dagger else "")

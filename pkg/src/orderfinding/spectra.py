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
"""Read-out spectra of the spins: line lists, Lorentzian traces and net areas."""
import itertools
import logging

import numpy as np

from orderfinding.gates import QUBIT_COUNT, YRotation

LOGGER = logging.getLogger(__name__)

AMPLITUDE_CUTOFF = 1e-12
DEFAULT_HALF_SPAN = 400.0
DEFAULT_POINTS = 8001

_SYNTHETIC_SHIFTS = (0.0, -2500.0, 4800.0, -7300.0, 9600.0)
_SYNTHETIC_COUPLINGS = {
    (1, 2): 43.5, (1, 3): -8.2, (1, 4): 21.9, (1, 5): 3.1, (2, 3): 13.7,
    (2, 4): -6.4, (2, 5): 31.0, (3, 4): 57.3, (3, 5): -19.8, (4, 5): 10.6,
}


class MoleculeParams:
    """Chemical shifts, J couplings and linewidth of the five spins, in Hz."""

    def __init__(self, shifts, couplings, linewidth, reference_spin=1):
        """Initialize.

        :raises: ValueError on a malformed coupling table or a nonpositive linewidth.
        :param shifts: Shift of each spin relative to the reference spin.
        :type shifts: sequence of float
        :param couplings: Symmetric table J_ij with zero diagonal.
        :type couplings: sequence of sequences
        :param linewidth: Full width at half maximum.
        :type linewidth: float
        :param reference_spin: Spin whose shift is the zero of the scale.
        :type reference_spin: int
        """
        shifts = np.array(shifts, dtype=float)
        couplings = np.array(couplings, dtype=float)
        if shifts.shape != (QUBIT_COUNT,):
            raise ValueError("Need {} shifts, got {}".format(QUBIT_COUNT, shifts.size))
        if couplings.shape != (QUBIT_COUNT, QUBIT_COUNT):
            raise ValueError("J must be {0}x{0}".format(QUBIT_COUNT))
        if not np.array_equal(couplings, couplings.T):
            raise ValueError("J must be symmetric")
        if np.any(np.diagonal(couplings)):
            raise ValueError("J must have a zero diagonal")
        if not linewidth > 0:
            raise ValueError("Linewidth must be positive, got {!r}".format(linewidth))
        if not 1 <= reference_spin <= QUBIT_COUNT:
            raise ValueError("Reference spin {} out of range".format(reference_spin))
        shifts.setflags(write=False)
        couplings.setflags(write=False)
        self.shifts = shifts
        self.couplings = couplings
        self.linewidth = float(linewidth)
        self.reference_spin = reference_spin

    @property
    def hwhm(self):
        """Half width at half maximum."""
        return self.linewidth / 2

    def shift(self, spin):
        """Shift of a spin, 1-based."""
        return float(self.shifts[spin - 1])

    def coupling(self, spin, other):
        """J between two spins, 1-based."""
        return float(self.couplings[spin - 1, other - 1])

    def default_grid(self, spin):
        """Grid of DEFAULT_POINTS points spanning DEFAULT_HALF_SPAN around a spin's shift.

        :rtype: tuple
        """
        center = self.shift(spin)
        return center - DEFAULT_HALF_SPAN, center + DEFAULT_HALF_SPAN, DEFAULT_POINTS


def synthetic_molecule():
    """Made-up five spin molecule with distinct, well separated lines.

    These are not measured constants of any real molecule.

    :rtype: :obj:`MoleculeParams`
    """
    couplings = np.zeros((QUBIT_COUNT, QUBIT_COUNT))
    for (spin, other), value in _SYNTHETIC_COUPLINGS.items():
        couplings[spin - 1, other - 1] = couplings[other - 1, spin - 1] = value
    return MoleculeParams(_SYNTHETIC_SHIFTS, couplings, linewidth=1.0)


class SpectralLine:
    """One resonance of a spin, labeled by the states of the other spins."""

    def __init__(self, spin, label, frequency, amplitude):
        """Initialize.

        :param spin: Observed spin.
        :type spin: int
        :param label: States of the other spins in ascending order, e.g. "0101".
        :type label: str
        :param frequency: Line position in Hz.
        :type frequency: float
        :param amplitude: Real part absorptive, imaginary part dispersive.
        :type amplitude: complex
        """
        self.spin = spin
        self.label = label
        self.frequency = float(frequency)
        self.amplitude = complex(amplitude)

    def __repr__(self):
        return "SpectralLine(spin={}, label={!r}, frequency={:.3f}, amplitude={:.6g})".format(
            self.spin, self.label, self.frequency, self.amplitude)


class Spectrum:
    """Line list, optionally rendered on a uniform frequency grid."""

    def __init__(self, lines, frequencies=None, trace=None):
        self.lines = list(lines)
        self.frequencies = frequencies
        self.trace = trace


def labels(qubit_count=QUBIT_COUNT):
    """Every configuration of the spins other than the observed one.

    :rtype: list of str
    """
    return ["".join(bits) for bits in itertools.product("01", repeat=qubit_count - 1)]


def line_frequency(spin, label, params):
    """Shift plus -J/2 for every partner in |0> and +J/2 for every partner in |1>.

    :param spin: Observed spin.
    :type spin: int
    :param label: Partner states in ascending spin order.
    :type label: str
    :param params: Molecule.
    :type params: :obj:`MoleculeParams`
    :return: Frequency in Hz.
    :rtype: float
    """
    partners = [other for other in range(1, len(params.shifts) + 1) if other != spin]
    frequency = params.shift(spin)
    for other, state in zip(partners, label):
        sign = 1 if state == "1" else -1
        frequency += sign * params.coupling(spin, other) / 2
    return frequency


def _basis_index(spin, state, label, qubit_count):
    bits = list(label)
    bits.insert(spin - 1, state)
    return int("".join(bits), 2)


def readout_lines(rho, spin, params):
    """Lines of a spin after an ideal 90 degree read-out pulse about y.

    The amplitude of the line labeled s is 2 <0,s| rho' |1,s>, with rho' the
    rotated operator, so a spin in |0> gives a positive absorptive line.

    :raises: :obj:`orderfinding.exceptions.GateError` on a bad spin index.
    :param rho: Density operator, normalized or deviation.
    :type rho: :obj:`orderfinding.state.DensityOperator`
    :param spin: Observed spin.
    :type spin: int
    :param params: Molecule.
    :type params: :obj:`MoleculeParams`
    :return: 16 lines in label order.
    :rtype: list of :obj:`SpectralLine`
    """
    pulse = YRotation(spin, 90.0)
    rotated = rho.conjugated(pulse.unitary(rho.qubit_count)).entries
    lines = []
    for label in labels(rho.qubit_count):
        lower = _basis_index(spin, "0", label, rho.qubit_count)
        upper = _basis_index(spin, "1", label, rho.qubit_count)
        amplitude = 2 * rotated[lower, upper]
        if abs(amplitude) < AMPLITUDE_CUTOFF:
            amplitude = 0j
        lines.append(SpectralLine(spin, label, line_frequency(spin, label, params), amplitude))
    LOGGER.debug("Spin %d lines: %r", spin, lines)
    return lines


def render_spectrum(lines, params, grid):
    """Complex Lorentzian superposition of lines.

    Each line contributes amplitude * (1/pi) / (hwhm - i (f - f_line)), whose
    real part integrates to the real part of the amplitude.

    :raises: ValueError on a bad grid.
    :param lines: Lines to render.
    :type lines: list of :obj:`SpectralLine`
    :param params: Molecule, for the linewidth.
    :type params: :obj:`MoleculeParams`
    :param grid: (f_min, f_max, points).
    :type grid: tuple
    :rtype: :obj:`Spectrum`
    """
    f_min, f_max, points = grid
    if not f_min < f_max or int(points) < 2:
        raise ValueError("Invalid grid {!r}".format(grid))
    frequencies = np.linspace(f_min, f_max, int(points))
    trace = np.zeros(frequencies.shape, dtype=complex)
    for line in lines:
        if line.amplitude:
            trace += line.amplitude / np.pi / (params.hwhm - 1j * (frequencies - line.frequency))
    return Spectrum(lines, frequencies, trace)


def spectrum_for_spin(rho, spin, params, grid=None):
    """Line list and rendered trace of one spin.

    :rtype: :obj:`Spectrum`
    """
    if grid is None:
        grid = params.default_grid(spin)
    return render_spectrum(readout_lines(rho, spin, params), params, grid)


def net_area(lines):
    """Sum of the absorptive line amplitudes.

    :rtype: float
    """
    return float(sum(line.amplitude.real for line in lines))


def hamiltonian_line_frequencies(spin, params):
    """Line positions from energy differences of the diagonal spin Hamiltonian.

    H = -sum_i nu_i I_zi + sum_{i<j} J_ij I_zi I_zj in Hz, with |0> the lower
    Zeeman level. The line labeled s sits at E(1, s) - E(0, s).

    :return: Label to frequency.
    :rtype: dict
    """
    count = len(params.shifts)
    iz = np.diag([0.5, -0.5])

    def single(operator, position):
        factors = [np.eye(2)] * count
        factors[position] = operator
        result = np.ones((1, 1))
        for factor in factors:
            result = np.kron(result, factor)
        return result

    hamiltonian = np.zeros((2 ** count, 2 ** count))
    for index in range(count):
        hamiltonian -= params.shifts[index] * single(iz, index)
        for other in range(index + 1, count):
            hamiltonian += params.couplings[index, other] * single(iz, index) @ single(iz, other)
    energies = np.diagonal(hamiltonian)
    return {label: float(energies[_basis_index(spin, "1", label, count)]
                         - energies[_basis_index(spin, "0", label, count)])
            for label in labels(count)}

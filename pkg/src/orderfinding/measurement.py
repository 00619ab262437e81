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
"""Outcome statistics of the first register and the optimal guess of the order."""
import logging

import numpy as np

from orderfinding.circuits import EXPONENTS, final_state
from orderfinding.exceptions import InfeasibleInput, StateError
from orderfinding.linprog import solve_float
from orderfinding.permutations import ELEMENTS
from orderfinding.state import DensityOperator

LOGGER = logging.getLogger(__name__)

ORDERS = (1, 2, 3, 4)
TOLERANCE = 1e-12
DISTRIBUTION_TOLERANCE = 1e-9


def _reverse_bits(value, width=3):
    return int(format(value, "0{}b".format(width))[::-1], 2)


class OutcomeDistribution:
    """Probabilities of the measurement result m in 0..7.

    Bit k of m is read on spin k + 1, so spin 1 holds the least significant
    bit, the transform being applied without its final swap.
    """

    def __init__(self, probs):
        """Initialize.

        :raises: :obj:`orderfinding.exceptions.StateError` if not a probability vector.
        :param probs: Eight probabilities.
        :type probs: sequence of float
        """
        probs = np.array(probs, dtype=float)
        if probs.shape != (EXPONENTS,):
            raise StateError("Need {} probabilities, got shape {}".format(EXPONENTS, probs.shape))
        if np.any(probs < -TOLERANCE) or abs(probs.sum() - 1) > TOLERANCE:
            raise StateError("Not a probability vector: {!r}".format(probs))
        probs = np.clip(probs, 0, None)
        probs.setflags(write=False)
        self.probs = probs

    def __getitem__(self, outcome):
        return self.probs[outcome]

    def __iter__(self):
        return iter(self.probs)

    def distance(self, other):
        """Largest absolute difference to another distribution.

        :rtype: float
        """
        return float(np.max(np.abs(self.probs - other.probs)))

    def __repr__(self):
        return "OutcomeDistribution({})".format(np.array2string(self.probs, precision=6))


class GuessStrategy:
    """g[m][k] is the probability of guessing order k + 1 after outcome m."""

    def __init__(self, g):
        """Initialize.

        :raises: :obj:`orderfinding.exceptions.StateError` if a row is not a probability vector.
        :param g: 8x4 array.
        :type g: sequence of sequences
        """
        g = np.array(g, dtype=float)
        if g.shape != (EXPONENTS, len(ORDERS)):
            raise StateError("Guess strategy must be {}x{}".format(EXPONENTS, len(ORDERS)))
        if np.any(g < -TOLERANCE) or not np.allclose(g.sum(axis=1), 1, rtol=0, atol=TOLERANCE):
            raise StateError("Guess strategy rows must be probability vectors")
        g = np.clip(g, 0, None)
        g.setflags(write=False)
        self.g = g

    @classmethod
    def always(cls, order):
        """Deterministically guess one order.

        :rtype: :obj:`GuessStrategy`
        """
        g = np.zeros((EXPONENTS, len(ORDERS)))
        g[:, ORDERS.index(order)] = 1
        return cls(g)

    @classmethod
    def uniform(cls):
        """Guess uniformly at random.

        :rtype: :obj:`GuessStrategy`
        """
        return cls(np.full((EXPONENTS, len(ORDERS)), 1 / len(ORDERS)))


class Observables:
    """Ensemble observables O_i = 1 - 2<m_i>."""

    def __init__(self, values):
        """Initialize.

        :raises: :obj:`orderfinding.exceptions.StateError` if a value leaves [-1, 1].
        :param values: O values, spin 1 first.
        :type values: sequence of float
        """
        values = tuple(float(value) for value in values)
        if any(abs(value) > 1 + TOLERANCE for value in values):
            raise StateError("Observable out of range: {!r}".format(values))
        self.values = values

    def __getitem__(self, index):
        return self.values[index]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __repr__(self):
        return "Observables({})".format(", ".join("{:.6g}".format(value) for value in self.values))


def analytic_distribution(order):
    """Exact distribution of m for a function of period order on 8 points.

    After the oracle the second register selects one residue class s of x
    modulo the order; each class is Fourier transformed on its own.

    :raises: ValueError if the order is not 1..4.
    :param order: Order r.
    :type order: int
    :rtype: :obj:`OutcomeDistribution`
    """
    if order not in ORDERS:
        raise ValueError("Order must be one of {}, got {!r}".format(ORDERS, order))
    omega = np.exp(2j * np.pi * np.outer(np.arange(EXPONENTS), np.arange(EXPONENTS)) / EXPONENTS)
    probs = np.zeros(EXPONENTS)
    for residue in range(order):
        members = np.arange(residue, EXPONENTS, order)
        probs += np.abs(omega[:, members].sum(axis=1)) ** 2
    return OutcomeDistribution(probs / EXPONENTS ** 2)


def final_density(spec):
    """Density operator after the order-finding circuit.

    :rtype: :obj:`orderfinding.state.DensityOperator`
    """
    return DensityOperator.from_state(final_state(spec))


def simulated_distribution(spec):
    """Distribution of m read from a full simulation of the circuit.

    :param spec: Problem instance.
    :type spec: :obj:`orderfinding.permutations.OracleSpec`
    :rtype: :obj:`OutcomeDistribution`
    """
    register = final_state(spec).probabilities().reshape(EXPONENTS, ELEMENTS).sum(axis=1)
    return OutcomeDistribution([register[_reverse_bits(outcome)] for outcome in range(EXPONENTS)])


def observables_from_distribution(distribution):
    """O_1 to O_3 from a distribution of m.

    :rtype: :obj:`Observables`
    """
    values = []
    for spin in (1, 2, 3):
        ones = sum(prob for outcome, prob in enumerate(distribution) if outcome >> (spin - 1) & 1)
        values.append(1 - 2 * ones)
    return Observables(values)


def observables(rho):
    """O_i for every spin of a normalized density operator.

    :rtype: :obj:`Observables`
    """
    return Observables(rho.expectation_iz(spin) for spin in range(1, rho.qubit_count + 1))


def _validate(dists):
    if len(dists) != len(ORDERS):
        raise InfeasibleInput("Need {} distributions, got {}".format(len(ORDERS), len(dists)))
    matrix = np.array([list(dist) for dist in dists], dtype=float)
    if matrix.shape != (len(ORDERS), EXPONENTS):
        raise InfeasibleInput("Distributions must have {} outcomes".format(EXPONENTS))
    if np.any(matrix < -DISTRIBUTION_TOLERANCE) or not np.allclose(
            matrix.sum(axis=1), 1, rtol=0, atol=DISTRIBUTION_TOLERANCE):
        raise InfeasibleInput("Invalid outcome distribution")
    return matrix


def optimal_guess_strategy(dists):
    """Strategy maximizing the worst case over r of Pr[guess = r].

    Variables are g[m][k] and the value v; the program maximizes v subject to
    sum_m Pr[m | r_k] g[m][k] >= v for every k and unit rows of g.

    :raises: :obj:`orderfinding.exceptions.InfeasibleInput` on an invalid distribution.
    :param dists: Distributions for r = 1..4.
    :type dists: sequence of :obj:`OutcomeDistribution`
    :return: Strategy and game value.
    :rtype: tuple
    """
    matrix = _validate(dists)
    orders = len(ORDERS)
    size = EXPONENTS * orders + 1
    cost = np.zeros(size)
    cost[-1] = -1
    a_ub = np.zeros((orders, size))
    for guess in range(orders):
        for outcome in range(EXPONENTS):
            a_ub[guess, outcome * orders + guess] = -matrix[guess, outcome]
        a_ub[guess, -1] = 1
    a_eq = np.zeros((EXPONENTS, size))
    for outcome in range(EXPONENTS):
        a_eq[outcome, outcome * orders:(outcome + 1) * orders] = 1
    value, solution = solve_float(cost, a_ub, np.zeros(orders), a_eq, np.ones(EXPONENTS))
    g = np.clip(solution[:-1].reshape(EXPONENTS, orders), 0, None)
    g /= g.sum(axis=1, keepdims=True)
    LOGGER.info("Guess game value %.9f", -value)
    return GuessStrategy(g), -value


def guess_success_per_r(strategy, dists):
    """Pr[guess = r | r] for each r.

    :rtype: :obj:`numpy.ndarray`
    """
    matrix = np.array([list(dist) for dist in dists], dtype=float)
    return np.einsum("km,mk->k", matrix, strategy.g)


def order_signature(order):
    """O_1 to O_3 of the analytic distribution of an order.

    :rtype: :obj:`Observables`
    """
    return observables_from_distribution(analytic_distribution(order))


def infer_order(values):
    """Order whose analytic O_1 to O_3 lie closest to the measured ones.

    :param values: Measured O_1, O_2, O_3.
    :type values: sequence of float
    :rtype: int
    """
    measured = np.array(list(values)[:3], dtype=float)
    distances = [np.linalg.norm(measured - np.array(list(order_signature(order))))
                 for order in ORDERS]
    return ORDERS[int(np.argmin(distances))]

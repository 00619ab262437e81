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
"""Measurement and guessing game tests."""
import numpy as np
import pytest
from numpy.testing import assert_allclose

from orderfinding.exceptions import InfeasibleInput, StateError
from orderfinding.measurement import (ORDERS, GuessStrategy, OutcomeDistribution,
                                      analytic_distribution, final_density, guess_success_per_r,
                                      infer_order, observables, observables_from_distribution,
                                      optimal_guess_strategy, order_signature,
                                      simulated_distribution)
from orderfinding.permutations import OracleSpec, Permutation, all_instances

from helpers import instance

ROOT2 = np.sqrt(2)


@pytest.mark.parametrize("order, expected", [
    (1, [1, 0, 0, 0, 0, 0, 0, 0]),
    (2, [0.5, 0, 0, 0, 0.5, 0, 0, 0]),
    (4, [0.25, 0, 0.25, 0, 0.25, 0, 0.25, 0]),
    (3, np.array([22, 8 - 5 * ROOT2, 4, 8 + 5 * ROOT2, 2, 8 + 5 * ROOT2, 4, 8 - 5 * ROOT2]) / 64),
])
def test_analytic_distribution(order, expected):
    """Closed forms of the four distributions."""
    assert_allclose(analytic_distribution(order).probs, expected, atol=1e-12)


def test_analytic_distribution_rejects_order():
    """Only orders 1 to 4 occur."""
    with pytest.raises(ValueError):
        analytic_distribution(5)


@pytest.mark.parametrize("spec", all_instances(), ids=repr)
def test_simulation_matches_analytic(spec):
    """Every instance reproduces the distribution of its order."""
    simulated = simulated_distribution(spec)
    assert simulated.distance(analytic_distribution(spec.order)) < 1e-10
    assert_allclose(list(observables_from_distribution(simulated)),
                    list(observables(final_density(spec)))[:3], atol=1e-10)


@pytest.mark.parametrize("order, expected", [
    (1, (1, 1, 1)),
    (2, (1, 1, 0)),
    (3, (0, 0.25, 0.3125)),
    (4, (1, 0, 0)),
])
def test_order_signature(order, expected):
    """O_1 to O_3 of each order."""
    assert list(order_signature(order)) == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize("order, expected", [
    (1, (1, 1, 1, 1, 1)),
    (2, (1, 1, 0, 1, 0)),
    (4, (1, 0, 0, 0, 0)),
])
def test_five_spin_observables(order, expected):
    """All five observables from the final density operator."""
    assert list(observables(final_density(instance(order)))) == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize("order", ORDERS)
def test_infer_order(order):
    """Each signature is recognised as its own order."""
    assert infer_order(order_signature(order)) == order


def test_optimal_guess_strategy(analytic_dists):
    """The worst case success of the best strategy is about 0.55."""
    strategy, value = optimal_guess_strategy(analytic_dists)
    assert 0.545 <= value <= 0.560
    success = guess_success_per_r(strategy, analytic_dists)
    assert np.all(success >= value - 1e-6)
    assert_allclose(strategy.g.sum(axis=1), 1, atol=1e-12)


def test_guess_value_ignores_labelling(analytic_dists):
    """Relabelling the orders leaves the value unchanged."""
    _, value = optimal_guess_strategy(analytic_dists)
    _, reversed_value = optimal_guess_strategy(analytic_dists[::-1])
    assert reversed_value == pytest.approx(value, abs=1e-9)


def test_identical_distributions_give_a_quarter():
    """Nothing to learn from one shared distribution."""
    dists = [analytic_distribution(3)] * 4
    _, value = optimal_guess_strategy(dists)
    assert value == pytest.approx(0.25, abs=1e-9)


def test_disjoint_distributions_give_certainty():
    """Disjoint supports are told apart every time."""
    dists = [OutcomeDistribution(np.eye(8)[outcome]) for outcome in range(4)]
    _, value = optimal_guess_strategy(dists)
    assert value == pytest.approx(1, abs=1e-9)


def test_invalid_distributions():
    """Rows that do not sum to one are refused."""
    with pytest.raises(InfeasibleInput):
        optimal_guess_strategy([[0.5] * 8] * 4)
    with pytest.raises(InfeasibleInput):
        optimal_guess_strategy([analytic_distribution(1)] * 3)


def test_fixed_strategies(analytic_dists):
    """Always guessing 1 only wins for r = 1; uniform guessing wins a quarter."""
    assert_allclose(guess_success_per_r(GuessStrategy.always(1), analytic_dists), [1, 0, 0, 0],
                    atol=1e-12)
    assert_allclose(guess_success_per_r(GuessStrategy.uniform(), analytic_dists), [0.25] * 4,
                    atol=1e-12)


def test_outcome_distribution_validation():
    """Distributions must have eight nonnegative entries summing to one."""
    with pytest.raises(StateError):
        OutcomeDistribution([1])
    with pytest.raises(StateError):
        OutcomeDistribution([0.5] * 8)


THREE_CYCLE_INSTANCES = [spec for spec in all_instances() if spec.order == 3]


@pytest.mark.parametrize("spec", THREE_CYCLE_INSTANCES, ids=repr)
def test_order_three_second_register(spec):
    """O_1 to O_3 keep the order three signature; O_4 and O_5 are quarter steps."""
    values = list(observables(final_density(spec)))
    assert values[:3] == pytest.approx([0, 0.25, 0.3125], abs=1e-12)
    for value in values[3:]:
        assert min(abs(value - step) for step in (0, 0.25, -0.25, 0.5, -0.5)) < 1e-12


@pytest.mark.parametrize("y, expected", [
    (0, (0.5, 0.25)),
    (1, (0.25, 0.25)),
    (2, (0.25, 0.5)),
])
def test_order_three_depends_on_start(y, expected):
    """For (0 1 2) the start element moves O_4 and O_5 but not O_3."""
    spec = OracleSpec(Permutation.parse("(0 1 2)"), y)
    values = list(observables(final_density(spec)))
    assert values[2] == pytest.approx(0.3125, abs=1e-12)
    assert values[3:] == pytest.approx(expected, abs=1e-12)

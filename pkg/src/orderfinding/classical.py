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
"""The classical query game: guess the order of y from oracle answers pi^x(y)."""
import itertools
import logging
from collections import OrderedDict
from fractions import Fraction

from orderfinding.linprog import solve_exact
from orderfinding.permutations import ELEMENTS, all_permutations

LOGGER = logging.getLogger(__name__)

ORDERS = (1, 2, 3, 4)
# pi^12 is the identity for every permutation on four elements.
EXPONENTS = tuple(range(1, 13))


class QueryPlan:
    """Fixed exponents to query and a randomized guess for each answer tuple."""

    def __init__(self, queries, guesses, weight=Fraction(1)):
        """Initialize.

        :param queries: Exponents x, asked in this order.
        :type queries: tuple of int
        :param guesses: Answer tuple to {order: probability}.
        :type guesses: dict
        :param weight: Probability of running this plan.
        :type weight: :obj:`fractions.Fraction`
        """
        self.queries = tuple(queries)
        self.guesses = {tuple(answers): dict(guess) for answers, guess in guesses.items()}
        self.weight = Fraction(weight)
        for guess in self.guesses.values():
            assert sum(guess.values()) == 1, "Guess {!r} is not a distribution".format(guess)

    def answers(self, pi, y):
        """Oracle answers pi^x(y) for every query."""
        return tuple(pi.power(exponent)(y) for exponent in self.queries)

    def success(self, pi, y):
        """Probability that this plan guesses the order of y.

        :rtype: :obj:`fractions.Fraction`
        """
        guess = self.guesses.get(self.answers(pi, y), {})
        return Fraction(guess.get(pi.order_of(y), 0))

    def __repr__(self):
        return "QueryPlan(queries={}, weight={})".format(self.queries, self.weight)


class QueryStrategy:
    """Mixture of query plans."""

    def __init__(self, plans):
        """Initialize.

        :param plans: Plans whose weights sum to one.
        :type plans: list of :obj:`QueryPlan`
        """
        self.plans = list(plans)
        assert sum(plan.weight for plan in self.plans) == 1, "Plan weights must sum to 1"

    @property
    def query_count(self):
        """Largest number of queries any plan makes."""
        return max(len(plan.queries) for plan in self.plans)

    def describe(self):
        """JSON friendly description.

        :rtype: list
        """
        description = []
        for plan in self.plans:
            guesses = OrderedDict()
            for answers in sorted(plan.guesses):
                guesses[",".join(str(answer) for answer in answers)] = OrderedDict(
                    (str(order), str(prob))
                    for order, prob in sorted(plan.guesses[answers].items()) if prob)
            description.append(OrderedDict([
                ("weight", str(plan.weight)),
                ("queries", list(plan.queries)),
                ("guesses", guesses),
            ]))
        return description


def evaluate_strategy(strategy, pi, y):
    """Probability that a strategy guesses the order of y under pi.

    :rtype: :obj:`fractions.Fraction`
    """
    return sum((plan.weight * plan.success(pi, y) for plan in strategy.plans), Fraction(0))


def strategy_value(strategy, y=0):
    """Worst case success over all 24 permutations.

    :rtype: :obj:`fractions.Fraction`
    """
    return min(evaluate_strategy(strategy, pi, y) for pi in all_permutations())


def cube_witness(y=0):
    """Query pi^3(y); guess 1 or 3 if it returned y, otherwise 2 or 4, each with 1/2.

    :rtype: :obj:`QueryStrategy`
    """
    half = Fraction(1, 2)
    guesses = {(answer,): ({1: half, 3: half} if answer == y else {2: half, 4: half})
               for answer in range(ELEMENTS)}
    return QueryStrategy([QueryPlan((3,), guesses)])


def _profiles(y):
    """Distinct (order, answers for x = 1..12) seen across the permutations."""
    profiles = OrderedDict()
    for pi in all_permutations():
        key = (pi.order_of(y), tuple(pi.power(exponent)(y) for exponent in EXPONENTS))
        profiles.setdefault(key, []).append(pi)
    return profiles


def one_query_value(y=0, guesses=ORDERS):
    """Exact value of the best randomized single query strategy against the worst pi.

    Variables are p_x, the probability of querying x; s[x, z, k], the
    probability of querying x, seeing z and guessing guesses[k]; and the value
    v. The program maximizes v subject to the success against every
    permutation being at least v.

    :param y: Known start element.
    :type y: int
    :param guesses: Orders the guesser may name.
    :type guesses: tuple of int
    :return: Value and an optimal strategy.
    :rtype: tuple
    """
    guesses = tuple(guesses)
    profiles = list(_profiles(y))
    queries, answers = len(EXPONENTS), ELEMENTS

    def joint(query, answer, guess):
        return queries + (query * answers + answer) * len(guesses) + guess

    size = queries + queries * answers * len(guesses) + 1
    cost = [0] * size
    cost[-1] = -1
    a_ub, b_ub = [], []
    for order, observed in profiles:
        row = [0] * size
        row[-1] = 1
        if order in guesses:
            for query in range(queries):
                row[joint(query, observed[query], guesses.index(order))] = -1
        a_ub.append(row)
        b_ub.append(0)
    a_eq, b_eq = [], []
    for query in range(queries):
        for answer in range(answers):
            row = [0] * size
            row[query] = -1
            for guess in range(len(guesses)):
                row[joint(query, answer, guess)] = 1
            a_eq.append(row)
            b_eq.append(0)
    a_eq.append([1] * queries + [0] * (size - queries))
    b_eq.append(1)
    value, solution = solve_exact(cost, a_ub, b_ub, a_eq, b_eq)
    value = -value

    plans = []
    for query in range(queries):
        weight = solution[query]
        if not weight:
            continue
        table = {}
        for answer in range(answers):
            table[(answer,)] = {order: solution[joint(query, answer, index)] / weight
                                for index, order in enumerate(guesses)}
        plans.append(QueryPlan((EXPONENTS[query],), table, weight))
    LOGGER.info("One query value for y=%d: %s", y, value)
    return value, QueryStrategy(plans)


def hardest_prior(y=0, guesses=ORDERS):
    """Prior over permutations that holds every single query strategy to the game value.

    Minimizes V subject to, for every exponent x, the sum over answers z of
    the best guess mass max_k Pr[pi^x(y) = z, order = guesses[k]] being at
    most V.

    :return: Value and the prior, permutation to probability.
    :rtype: tuple
    """
    guesses = tuple(guesses)
    permutations = all_permutations()
    count, queries, answers = len(permutations), len(EXPONENTS), ELEMENTS

    def best(query, answer):
        return count + query * answers + answer

    size = count + queries * answers + 1
    cost = [0] * size
    cost[-1] = 1
    a_ub, b_ub = [], []
    for query, exponent in enumerate(EXPONENTS):
        for answer in range(answers):
            for order in guesses:
                row = [0] * size
                row[best(query, answer)] = -1
                for index, pi in enumerate(permutations):
                    if pi.power(exponent)(y) == answer and pi.order_of(y) == order:
                        row[index] = 1
                a_ub.append(row)
                b_ub.append(0)
        row = [0] * size
        row[-1] = -1
        for answer in range(answers):
            row[best(query, answer)] = 1
        a_ub.append(row)
        b_ub.append(0)
    a_eq = [[1] * count + [0] * (size - count)]
    value, solution = solve_exact(cost, a_ub, b_ub, a_eq, [1])
    prior = OrderedDict((str(pi), solution[index])
                        for index, pi in enumerate(permutations) if solution[index])
    LOGGER.info("Hardest prior value for y=%d: %s", y, value)
    return value, prior


def decision_table_witness(y=0):
    """Query x=2 and x=3 and read the order off which answers return to y.

    :rtype: :obj:`QueryStrategy`
    """
    table = {}
    for answers in itertools.product(range(ELEMENTS), repeat=2):
        square_fixed, cube_fixed = (answer == y for answer in answers)
        if square_fixed and cube_fixed:
            order = 1
        elif square_fixed:
            order = 2
        elif cube_fixed:
            order = 3
        else:
            order = 4
        table[answers] = {order: Fraction(1)}
    return QueryStrategy([QueryPlan((2, 3), table)])


def distinguishes(queries, y=0):
    """Whether the answers to fixed queries always determine the order.

    :rtype: bool
    """
    seen = {}
    for pi in all_permutations():
        answers = tuple(pi.power(exponent)(y) for exponent in queries)
        seen.setdefault(answers, set()).add(pi.order_of(y))
    return all(len(orders) == 1 for orders in seen.values())


def single_query_certificate():
    """Check every deterministic single query strategy against every (pi, y).

    :return: Strategies checked and how many of them never fail.
    :rtype: tuple
    """
    permutations = all_permutations()
    checked = perfect = 0
    for y in range(ELEMENTS):
        for exponent in EXPONENTS:
            cases = [(pi.power(exponent)(y), pi.order_of(y)) for pi in permutations]
            for table in itertools.product(ORDERS, repeat=ELEMENTS):
                checked += 1
                if all(table[answer] == order for answer, order in cases):
                    perfect += 1
    LOGGER.info("Single query certificate: %d checked, %d perfect", checked, perfect)
    return checked, perfect


def two_query_certainty():
    """Whether two queries always find the order while one never does.

    :return: Verdict and the two query witness for y = 0.
    :rtype: tuple
    """
    witness_holds = all(strategy_value(decision_table_witness(y), y) == 1
                        for y in range(ELEMENTS))
    _, perfect = single_query_certificate()
    return witness_holds and perfect == 0, decision_table_witness(0)

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
"""Permutation and oracle tests."""
import numpy as np
import pytest
from numpy.testing import assert_allclose

from orderfinding.circuit import Circuit
from orderfinding.exceptions import ParseError, StateError
from orderfinding.permutations import (OracleSpec, Permutation, all_instances,
                                       all_permutations, oracle_stages, oracle_unitary,
                                       order_of, permutation_matrix, power)


def test_parse_cycle_notation():
    """Cycle notation and image lists describe the same permutation."""
    assert Permutation.parse("(0 1)(2 3)") == Permutation.parse("1,0,3,2")
    assert Permutation.parse("(0 1 2 3)").images == (1, 2, 3, 0)
    assert Permutation.parse("()") == Permutation.identity()


@pytest.mark.parametrize("pi", all_permutations(), ids=str)
def test_text_round_trip(pi):
    """Printing and parsing gives back the permutation."""
    assert Permutation.parse(str(pi)) == pi


@pytest.mark.parametrize("text, column", [
    ("(0 1", 5),
    ("(0 5)", 4),
    ("(0 1)(1 2)", 7),
    ("(0 x)", 4),
])
def test_parse_error_column(text, column):
    """Parse errors carry the column of the problem."""
    with pytest.raises(ParseError) as error:
        Permutation.parse(text)
    assert error.value.column == column


@pytest.mark.parametrize("text", ["", "1,0,3", "1,1,2,3", "1,0,3,2,"])
def test_parse_rejects(text):
    """Incomplete or repeated image lists are refused."""
    with pytest.raises(ParseError):
        Permutation.parse(text)


def test_canonical_text():
    """Cycles start at their smallest element, fixed points are dropped."""
    assert str(Permutation.parse("(2 0 1)")) == "(0 1 2)"
    assert str(Permutation.parse("(0 1 2 3)").power(2)) == "(0 2)(1 3)"
    assert str(Permutation.parse("(3)")) == "()"


def test_compose_applies_other_first():
    """(self o other)(y) = self(other(y))."""
    first = Permutation.parse("(0 1)")
    second = Permutation.parse("(1 2)")
    composed = second.compose(first)
    assert [composed(element) for element in range(4)] == [2, 0, 1, 3]


@pytest.mark.parametrize("pi", all_permutations(), ids=str)
def test_power_matches_repeated_application(pi):
    """Fast exponentiation agrees with applying pi x times."""
    for element in range(4):
        current = element
        for exponent in range(13):
            assert pi.power(exponent)(element) == current
            current = pi(current)


@pytest.mark.parametrize("text, y, order", [
    ("()", 0, 1),
    ("(0 1)(2 3)", 0, 2),
    ("(0 1 2)", 0, 3),
    ("(0 1 2)", 3, 1),
    ("(0 1 2 3)", 2, 4),
])
def test_order(text, y, order):
    """Order is the length of the cycle holding y."""
    assert OracleSpec(Permutation.parse(text), y).order == order


def test_order_counts():
    """Across the 96 instances each order occurs as the cycle structure says."""
    counts = {}
    for spec in all_instances():
        counts[spec.order] = counts.get(spec.order, 0) + 1
    assert len(all_instances()) == 96
    assert counts == {1: 24, 2: 24, 3: 24, 4: 24}


def test_start_element_range():
    """y must be in 0..3."""
    with pytest.raises(StateError):
        OracleSpec(Permutation.identity(), 4)


def test_permutation_matrix():
    """Column y has its one at row pi(y)."""
    matrix = permutation_matrix(Permutation.parse("(0 1 2 3)"))
    assert_allclose(matrix @ np.eye(4)[0], np.eye(4)[1])
    assert_allclose(matrix @ np.eye(4)[3], np.eye(4)[0])


@pytest.mark.parametrize("pi", all_permutations(), ids=str)
def test_oracle_maps_x_y_to_power(pi):
    """The controlled stages realize |x>|y> -> |x>|pi^x(y)>."""
    unitary = Circuit(oracle_stages(pi)).unitary()
    assert_allclose(unitary, oracle_unitary(pi), atol=1e-12)
    for exponent in range(8):
        for element in range(4):
            column = unitary[:, exponent * 4 + element]
            assert abs(column[exponent * 4 + pi.power(exponent)(element)] - 1) < 1e-12


@pytest.mark.parametrize("pi", all_permutations(), ids=str)
def test_cycle_mates_share_order(pi):
    """y and pi(y) sit on the same cycle."""
    for element in range(4):
        assert order_of(pi, element) == order_of(pi, pi(element))
        assert pi.power(order_of(pi, element))(element) == element


@pytest.mark.parametrize("pi", all_permutations(), ids=str)
def test_powers_add(pi):
    """pi^(a+b) = pi^a o pi^b."""
    for first in range(13):
        for second in range(13 - first):
            assert power(pi, first + second) == power(pi, first).compose(power(pi, second))

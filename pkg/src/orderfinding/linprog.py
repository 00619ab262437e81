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
"""Linear programs: an exact rational simplex and a floating point wrapper.

Both solve::

    minimize    c . x
    subject to  A_ub x <= b_ub
                A_eq x == b_eq
                x >= 0
"""
import logging
from fractions import Fraction

import numpy as np
from scipy.optimize import linprog

from orderfinding.exceptions import InfeasibleInput, OrderFindingError, UnboundedProgram


class ExactSimplex:
    """Two phase simplex over :obj:`fractions.Fraction` with Bland's rule.

    Rows of the tableau are updated only where the pivot row is nonzero, which
    keeps the sparse programs of this package fast enough in exact arithmetic.
    """

    logger = logging.getLogger("ExactSimplex")

    def __init__(self, c, a_ub=(), b_ub=(), a_eq=(), b_eq=(), max_pivots=100000):
        """Initialize.

        :param c: Objective coefficients.
        :type c: sequence
        :param a_ub: Inequality rows.
        :type a_ub: sequence of sequences
        :param b_ub: Inequality right hand sides.
        :type b_ub: sequence
        :param a_eq: Equality rows.
        :type a_eq: sequence of sequences
        :param b_eq: Equality right hand sides.
        :type b_eq: sequence
        :param max_pivots: Pivots allowed before giving up.
        :type max_pivots: int
        """
        self.costs = [Fraction(value) for value in c]
        self.variables = len(self.costs)
        self.slacks = len(a_ub)
        self.max_pivots = max_pivots
        self.pivots = 0
        assert len(a_ub) == len(b_ub) and len(a_eq) == len(b_eq), "Row and rhs counts differ"

        rows, needs_artificial = [], []
        for index, (row, rhs) in enumerate(zip(a_ub, b_ub)):
            entries = self._row(row) + [Fraction(0)] * self.slacks
            entries[self.variables + index] = Fraction(1)
            rows.append(entries + [Fraction(rhs)])
            needs_artificial.append(Fraction(rhs) < 0)
        for row, rhs in zip(a_eq, b_eq):
            rows.append(self._row(row) + [Fraction(0)] * self.slacks + [Fraction(rhs)])
            needs_artificial.append(True)

        self.artificials = sum(needs_artificial)
        width = self.variables + self.slacks + self.artificials
        self.tableau, self.basis = [], []
        artificial = self.variables + self.slacks
        for index, (entries, needs) in enumerate(zip(rows, needs_artificial)):
            if entries[-1] < 0:
                entries = [-entry for entry in entries]
            rhs = entries.pop()
            entries += [Fraction(0)] * self.artificials + [rhs]
            if needs:
                entries[artificial] = Fraction(1)
                self.basis.append(artificial)
                artificial += 1
            else:
                self.basis.append(self.variables + index)
            assert len(entries) == width + 1
            self.tableau.append(entries)
        self.objective = None

    def _row(self, row):
        entries = [Fraction(value) for value in row]
        assert len(entries) == self.variables, "Row length differs from objective length"
        return entries

    def _set_objective(self, costs):
        objective = list(costs) + [Fraction(0)]
        for row, column in zip(self.tableau, self.basis):
            factor = costs[column]
            if factor:
                for index, entry in enumerate(row):
                    if entry:
                        objective[index] -= factor * entry
        self.objective = objective

    def _pivot(self, row_index, column):
        pivot_row = self.tableau[row_index]
        value = pivot_row[column]
        if value != 1:
            pivot_row[:] = [entry / value if entry else entry for entry in pivot_row]
        nonzero = [index for index, entry in enumerate(pivot_row) if entry]
        for other in self.tableau + [self.objective]:
            if other is pivot_row:
                continue
            factor = other[column]
            if factor:
                for index in nonzero:
                    other[index] -= factor * pivot_row[index]
        self.basis[row_index] = column
        self.pivots += 1
        if self.pivots > self.max_pivots:
            raise OrderFindingError("Simplex exceeded {} pivots".format(self.max_pivots))

    def _iterate(self, columns):
        while True:
            entering = next((column for column in columns if self.objective[column] < 0), None)
            if entering is None:
                return
            best = None
            for index, row in enumerate(self.tableau):
                if row[entering] > 0:
                    ratio = row[-1] / row[entering]
                    if best is None or ratio < best[0] or (
                            ratio == best[0] and self.basis[index] < self.basis[best[1]]):
                        best = (ratio, index)
            if best is None:
                raise UnboundedProgram("Objective is unbounded below")
            self._pivot(best[1], entering)

    def solve(self):
        """Run both phases.

        :raises: :obj:`orderfinding.exceptions.InfeasibleInput` if no feasible point exists.
        :raises: :obj:`orderfinding.exceptions.UnboundedProgram` if the objective is unbounded.
        :return: Optimal value and an optimal x.
        :rtype: tuple
        """
        structural = self.variables + self.slacks
        if self.artificials:
            self._set_objective([Fraction(0)] * structural + [Fraction(1)] * self.artificials)
            self._iterate(range(structural + self.artificials))
            if self.objective[-1] != 0:
                raise InfeasibleInput("Linear program is infeasible")
            self._drive_out_artificials(structural)
            self.tableau = [row[:structural] + [row[-1]] for row in self.tableau]
        self._set_objective(self.costs + [Fraction(0)] * self.slacks)
        self._iterate(range(structural))
        solution = [Fraction(0)] * self.variables
        for row, column in zip(self.tableau, self.basis):
            if column < self.variables:
                solution[column] = row[-1]
        value = -self.objective[-1]
        self.logger.debug("Optimum %s after %d pivots", value, self.pivots)
        return value, solution

    def _drive_out_artificials(self, structural):
        for index in reversed(range(len(self.basis))):
            if self.basis[index] < structural:
                continue
            row = self.tableau[index]
            column = next((column for column in range(structural) if row[column]), None)
            if column is None:
                self.logger.debug("Dropping redundant row %d", index)
                del self.tableau[index]
                del self.basis[index]
            else:
                self._pivot(index, column)


def solve_exact(c, a_ub=(), b_ub=(), a_eq=(), b_eq=()):
    """Solve a linear program exactly. See :obj:`ExactSimplex`.

    :return: Optimal value and x, as fractions.
    :rtype: tuple
    """
    return ExactSimplex(c, a_ub, b_ub, a_eq, b_eq).solve()


def solve_float(c, a_ub=None, b_ub=None, a_eq=None, b_eq=None):
    """Solve a linear program with the HiGHS solver.

    :raises: :obj:`orderfinding.exceptions.InfeasibleInput` if infeasible.
    :raises: :obj:`orderfinding.exceptions.UnboundedProgram` if unbounded.
    :return: Optimal value and x.
    :rtype: tuple
    """
    result = linprog(
        c=np.asarray(c, dtype=float),
        A_ub=None if a_ub is None else np.asarray(a_ub, dtype=float),
        b_ub=None if b_ub is None else np.asarray(b_ub, dtype=float),
        A_eq=None if a_eq is None else np.asarray(a_eq, dtype=float),
        b_eq=None if b_eq is None else np.asarray(b_eq, dtype=float),
        bounds=[(0.0, None)] * len(c),
        method="highs",
    )
    if result.status == 2:
        raise InfeasibleInput("Linear program is infeasible: {}".format(result.message))
    if result.status == 3:
        raise UnboundedProgram("Linear program is unbounded: {}".format(result.message))
    if result.status != 0:
        raise OrderFindingError("Linear program failed: {}".format(result.message))
    return float(result.fun), result.x

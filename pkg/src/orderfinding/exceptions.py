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
"""Exceptions."""


class OrderFindingError(Exception):
    """Base exception for orderfinding."""


class GateError(OrderFindingError, ValueError):
    """Gate with invalid qubit indices or a non-unitary block."""


class StateError(OrderFindingError, ValueError):
    """State or density operator violating its invariants."""


class ParseError(OrderFindingError, ValueError):
    """Text that could not be parsed.

    :param message: What went wrong.
    :type message: str
    :param text: The text that was being parsed.
    :type text: str
    :param column: 1-based column of the offending character.
    :type column: int
    :param line: 1-based line of the offending character.
    :type line: int
    """

    def __init__(self, message, text="", column=1, line=1):
        self.text = text
        self.column = column
        self.line = line
        super().__init__("{} (line {}, column {}): {!r}".format(message, line, column, text))


class ConfigError(OrderFindingError, KeyError):
    """Missing or malformed configuration key."""

    def __str__(self):
        # KeyError quotes its argument, keep the message readable.
        return str(self.args[0]) if self.args else ""


class SearchExhausted(OrderFindingError):
    """A search ran out of candidates or budget without a result."""


class InfeasibleInput(OrderFindingError, ValueError):
    """Invalid input to an optimization, or an infeasible program."""


class UnboundedProgram(OrderFindingError):
    """Linear program with an unbounded objective."""

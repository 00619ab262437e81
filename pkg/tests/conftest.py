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
"""Shared fixtures."""
import pytest

from orderfinding.dataset import Dataset
from orderfinding.measurement import ORDERS, analytic_distribution
from orderfinding.spectra import synthetic_molecule


@pytest.fixture
def molecule():
    """Synthetic molecule."""
    return synthetic_molecule()


@pytest.fixture
def analytic_dists():
    """Analytic distributions for r = 1..4."""
    return [analytic_distribution(order) for order in ORDERS]


@pytest.fixture
def dataset():
    """Dataset holding the defaults."""
    return Dataset()

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
"""Report writer tests."""
import json

import pytest

from orderfinding import reports
from orderfinding.measurement import analytic_distribution
from orderfinding.prodops import REFERENCE_PREP_SEQUENCES, verify_prep_set


@pytest.mark.parametrize("value, text", [
    (0.5, "0.5"),
    (-1e-20, "0"),
    (0.9999999999999998, "1"),
    (1 / 3, "0.333333333333"),
])
def test_format_number(value, text):
    """Twelve significant digits and no negative zero."""
    assert reports.format_number(value) == text


def test_write_distribution(tmp_path):
    """One row per outcome."""
    path = reports.write_distribution(str(tmp_path / "d.csv"), analytic_distribution(2))
    rows = open(path).read().splitlines()
    assert rows[0] == "m,probability"
    assert rows[1] == "0,0.5"
    assert rows[5] == "4,0.5"
    assert len(rows) == 9


def test_write_json_is_stable(tmp_path):
    """Indented JSON ending with a newline."""
    path = reports.write_json(str(tmp_path / "r.json"), {"a": 1})
    assert open(path).read() == '{\n  "a": 1\n}\n'


def test_output_path_creates_directory(tmp_path):
    """Missing output directories are created."""
    path = reports.output_path(str(tmp_path / "new" / "dir"), "x.csv")
    assert (tmp_path / "new" / "dir").is_dir()
    assert path.endswith("x.csv")


def test_prep_report():
    """The report is plain JSON."""
    document = reports.prep_report(verify_prep_set(REFERENCE_PREP_SEQUENCES))
    parsed = json.loads(json.dumps(document))
    assert parsed["total_terms"] == 45
    assert parsed["residual"] == {}
    assert len(parsed["summed"]) == 31

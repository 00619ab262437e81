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
"""Deterministic CSV and JSON output."""
import csv
import json
import logging
import os
from collections import OrderedDict

LOGGER = logging.getLogger(__name__)

SIGNIFICANT_DIGITS = 12


def format_number(value):
    """Fixed precision text of a number, without negative zero.

    :param value: Number.
    :type value: float
    :rtype: str
    """
    value = float(value)
    if abs(value) < 10 ** -(SIGNIFICANT_DIGITS + 3):
        value = 0.0
    return "{:.{}g}".format(value, SIGNIFICANT_DIGITS)


def write_csv(path, header, rows):
    """Write a CSV file with a header row and Unix line endings.

    :param path: Output file.
    :type path: str
    :param header: Column names.
    :type header: list of str
    :param rows: Rows, numbers are formatted with :func:`format_number`.
    :type rows: iterable
    :return: The path.
    :rtype: str
    """
    with open(path, "w", newline="") as csv_file:
        writer = csv.writer(csv_file, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_number(cell) if isinstance(cell, float) else cell
                             for cell in row])
    LOGGER.info("Wrote %s", path)
    return path


def write_json(path, data):
    """Write a JSON document with stable key order.

    :param path: Output file.
    :type path: str
    :param data: JSON friendly data, use OrderedDict for fixed key order.
    :type data: any
    :return: The path.
    :rtype: str
    """
    with open(path, "w") as json_file:
        json_file.write(json.dumps(data, indent=2))
        json_file.write("\n")
    LOGGER.info("Wrote %s", path)
    return path


def output_path(directory, name):
    """Path inside the output directory, created on demand.

    :rtype: str
    """
    os.makedirs(directory, exist_ok=True)
    return os.path.join(directory, name)


def write_distribution(path, distribution):
    """Columns m, probability.

    :rtype: str
    """
    return write_csv(path, ["m", "probability"],
                     ([outcome, float(prob)] for outcome, prob in enumerate(distribution)))


def write_distributions(path, dists):
    """Columns m, p_r1..p_r4.

    :param dists: Distributions for r = 1..4.
    :type dists: list of :obj:`orderfinding.measurement.OutcomeDistribution`
    :rtype: str
    """
    header = ["m"] + ["p_r{}".format(order) for order in range(1, len(dists) + 1)]
    rows = ([outcome] + [float(dist[outcome]) for dist in dists]
            for outcome in range(len(dists[0].probs)))
    return write_csv(path, header, rows)


def write_strategy(path, strategy):
    """Columns m, g_r1..g_r4.

    :rtype: str
    """
    header = ["m"] + ["g_r{}".format(order) for order in range(1, strategy.g.shape[1] + 1)]
    rows = ([outcome] + [float(prob) for prob in row] for outcome, row in enumerate(strategy.g))
    return write_csv(path, header, rows)


def write_lines(path, lines):
    """Columns spin, label, frequency_hz, amp_real, amp_imag.

    :rtype: str
    """
    rows = ([line.spin, line.label, line.frequency, line.amplitude.real, line.amplitude.imag]
            for line in lines)
    return write_csv(path, ["spin", "label", "frequency_hz", "amp_real", "amp_imag"], rows)


def write_trace(path, spectrum):
    """Columns frequency_hz, real, imag.

    :rtype: str
    """
    rows = ([float(frequency), float(value.real), float(value.imag)]
            for frequency, value in zip(spectrum.frequencies, spectrum.trace))
    return write_csv(path, ["frequency_hz", "real", "imag"], rows)


def prep_report(report):
    """JSON friendly form of a preparation report.

    :rtype: :obj:`collections.OrderedDict`
    """
    return OrderedDict([
        ("total_terms", report["total_terms"]),
        ("is_effective_pure", report["is_effective_pure"]),
        ("summed", OrderedDict(sorted(report["summed"].coefficients.items()))),
        ("residual", OrderedDict(sorted(report["residual"].coefficients.items()))),
        ("canceled", report["canceled"]),
        ("canceled_pairs", report["canceled_pairs"]),
    ])

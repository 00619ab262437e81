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
"""Subcommands of the command line interface.

Every command writes its files to an output directory and returns whether
all of its verifications passed.
"""
import logging
from collections import OrderedDict

import numpy as np

from orderfinding import reports
from orderfinding.circuits import REFERENCE_ORACLE_SEQUENCES, build_qft3, dft_matrix, \
    search_sequence_instances, verify_oracle_sequence
from orderfinding.classical import cube_witness, decision_table_witness, distinguishes, \
    hardest_prior, one_query_value, single_query_certificate, strategy_value
from orderfinding.dataset import Dataset
from orderfinding.exceptions import ConfigError
from orderfinding.measurement import ORDERS, analytic_distribution, final_density, \
    guess_success_per_r, infer_order, observables, observables_from_distribution, \
    optimal_guess_strategy, simulated_distribution
from orderfinding.native import PRODUCT_ORDER, NativeSequence
from orderfinding.permutations import ELEMENTS, OracleSpec, Permutation, all_instances
from orderfinding.prodops import REFERENCE_PREP_SEQUENCES, PrepSequence, verify_prep_set
from orderfinding.spectra import net_area, readout_lines, render_spectrum

LOGGER = logging.getLogger(__name__)

SWEEP_TOLERANCE = 1e-10
QFT_TOLERANCE = 1e-12
GUESS_TOLERANCE = 1e-6
READOUT_SPIN = 1


class RunConfig:
    """Inputs of a single order-finding run."""

    def __init__(self, permutation="()", y=0, molecule=None, out=".", grid=None):
        """Initialize.

        :raises: :obj:`orderfinding.exceptions.ParseError` on a bad permutation.
        :raises: :obj:`orderfinding.exceptions.ConfigError` on a bad y or grid.
        :param permutation: Permutation text, cycle notation or image list.
        :type permutation: str
        :param y: Start element.
        :type y: int
        :param molecule: Optional molecule JSON file.
        :type molecule: str
        :param out: Output directory.
        :type out: str
        :param grid: Optional (f_min, f_max, points).
        :type grid: tuple
        """
        self.permutation = Permutation.parse(permutation)
        self.y = check_y(y)
        self.molecule = molecule
        self.out = out
        if grid is not None:
            grid = parse_grid(grid) if isinstance(grid, str) else tuple(grid)
        self.grid = grid

    @property
    def spec(self):
        """Problem instance."""
        return OracleSpec(self.permutation, self.y)

    def dataset(self):
        """Configuration with the molecule file and grid merged in, when given.

        :rtype: :obj:`orderfinding.dataset.Dataset`
        """
        dataset = Dataset()
        if self.molecule:
            dataset.load(self.molecule)
        if self.grid is not None:
            dataset.add("grid", self.grid)
        return dataset


def parse_grid(text):
    """Parse "fmin,fmax,points".

    :raises: :obj:`orderfinding.exceptions.ConfigError` if malformed.
    :rtype: tuple
    """
    parts = text.split(",")
    try:
        f_min, f_max, points = float(parts[0]), float(parts[1]), int(parts[2])
    except (IndexError, ValueError) as exception:
        raise ConfigError("Grid must be 'fmin,fmax,points', got {!r}".format(text)) \
            from exception
    if len(parts) != 3 or not f_min < f_max or points < 2:
        raise ConfigError("Invalid grid {!r}".format(text))
    return f_min, f_max, points


def check_y(y):
    """Validate a start element.

    :raises: :obj:`orderfinding.exceptions.ConfigError` if y is not in 0..3.
    :rtype: int
    """
    if not 0 <= int(y) < ELEMENTS:
        raise ConfigError("y must be in 0..{}, got {}".format(ELEMENTS - 1, y))
    return int(y)


def analytic_distributions():
    """Analytic distributions for r = 1..4."""
    return [analytic_distribution(order) for order in ORDERS]


def cmd_run(config):
    """Simulate one instance and write its distribution, observables, spectrum and guess.

    :param config: Run inputs.
    :type config: :obj:`RunConfig`
    :return: Whether the inferred order matches the true one.
    :rtype: bool
    """
    spec = config.spec
    dataset = config.dataset()
    molecule = dataset.molecule()
    grid = dataset.grid(READOUT_SPIN, molecule)
    LOGGER.info("Running %r", spec)

    distribution = simulated_distribution(spec)
    rho = final_density(spec)
    values = observables(rho)
    lines = readout_lines(rho, READOUT_SPIN, molecule)
    spectrum = render_spectrum(lines, molecule, grid)
    strategy, value = optimal_guess_strategy(analytic_distributions())
    inferred = infer_order(observables_from_distribution(distribution))
    success = float(np.dot(distribution.probs, strategy.g[:, ORDERS.index(spec.order)]))

    out = config.out
    reports.write_distribution(reports.output_path(out, "distribution.csv"), distribution)
    reports.write_json(reports.output_path(out, "observables.json"), OrderedDict([
        ("permutation", str(spec.pi)),
        ("y", spec.y),
        ("O", [reports.format_number(value) for value in values]),
    ]))
    reports.write_lines(reports.output_path(out, "lines_spin{}.csv".format(READOUT_SPIN)), lines)
    reports.write_trace(reports.output_path(out, "spectrum_spin{}.csv".format(READOUT_SPIN)),
                        spectrum)
    reports.write_json(reports.output_path(out, "order.json"), OrderedDict([
        ("permutation", str(spec.pi)),
        ("y", spec.y),
        ("order", spec.order),
        ("inferred_order", inferred),
        ("net_area_spin{}".format(READOUT_SPIN), reports.format_number(net_area(lines))),
        ("guess_value", reports.format_number(value)),
        ("guess_success", reports.format_number(success)),
    ]))
    return inferred == spec.order


def cmd_sweep(out):
    """Compare simulation and analytic distribution for all 96 instances.

    :return: Whether every instance agrees within SWEEP_TOLERANCE.
    :rtype: bool
    """
    rows = []
    passed = True
    for spec in all_instances():
        distribution = simulated_distribution(spec)
        distance = distribution.distance(analytic_distribution(spec.order))
        passed = passed and distance <= SWEEP_TOLERANCE
        rows.append([str(spec.pi), spec.y, spec.order, float(distance)]
                    + [float(value) for value in observables_from_distribution(distribution)])
        LOGGER.debug("%r distance %g", spec, distance)
    reports.write_csv(reports.output_path(out, "sweep.csv"),
                      ["permutation", "y", "order", "distance", "O1", "O2", "O3"], rows)
    return passed


def cmd_prep_verify(out, sequences=None):
    """Verify a set of preparation sequences, by default the nine reference ones.

    :param sequences: Sequence texts, read in time order.
    :type sequences: list of str
    :return: Whether the set yields the effective pure target.
    :rtype: bool
    """
    if sequences:
        seqs = [PrepSequence.parse(text) for text in sequences]
    else:
        seqs = REFERENCE_PREP_SEQUENCES
    report = verify_prep_set(seqs)
    document = reports.prep_report(report)
    document["sequences"] = [str(seq) for seq in seqs]
    reports.write_json(reports.output_path(out, "prep_report.json"), document)
    return report["is_effective_pure"]


def cmd_guess_table(out):
    """Write the analytic distributions and the optimal guess strategy.

    :return: Whether every order is guessed with at least the game value.
    :rtype: bool
    """
    dists = analytic_distributions()
    strategy, value = optimal_guess_strategy(dists)
    success = guess_success_per_r(strategy, dists)
    reports.write_distributions(reports.output_path(out, "distributions.csv"), dists)
    reports.write_strategy(reports.output_path(out, "guess_strategy.csv"), strategy)
    reports.write_json(reports.output_path(out, "guess_report.json"), OrderedDict([
        ("value", reports.format_number(value)),
        ("success_per_r", [reports.format_number(prob) for prob in success]),
    ]))
    return bool(np.all(success >= value - GUESS_TOLERANCE))


def cmd_classical(out):
    """Solve the classical query game and certify the two query bound.

    :return: Whether one query is worth exactly 1/2 and two queries suffice.
    :rtype: bool
    """
    results = [one_query_value(y) for y in range(ELEMENTS)]
    values = [result[0] for result in results]
    value, strategy = results[0]
    prior_value, prior = hardest_prior(0)
    witness_value = strategy_value(cube_witness(0), 0)
    two_query = all(strategy_value(decision_table_witness(y), y) == 1 for y in range(ELEMENTS))
    checked, perfect = single_query_certificate()
    report = OrderedDict([
        ("one_query_value", str(value)),
        ("one_query_value_per_y", [str(item) for item in values]),
        ("one_query_strategy", strategy.describe()),
        ("hardest_prior_value", str(prior_value)),
        ("hardest_prior", OrderedDict((key, str(prob)) for key, prob in prior.items())),
        ("x3_strategy_value", str(witness_value)),
        ("two_query_witness", decision_table_witness(0).describe()),
        ("two_query_certain", two_query),
        ("queries_4_8_distinguish", distinguishes((4, 8))),
        ("single_query_deterministic_checked", checked),
        ("single_query_deterministic_perfect", perfect),
    ])
    reports.write_json(reports.output_path(out, "classical_report.json"), report)
    return (len(set(values)) == 1 and value == prior_value == witness_value
            and value * 2 == 1 and two_query and perfect == 0)


def cmd_qft_check(out):
    """Compare the Fourier circuits with the DFT.

    :return: Whether both variants agree within QFT_TOLERANCE.
    :rtype: bool
    """
    with_swap = float(np.max(np.abs(build_qft3(True).unitary() - dft_matrix())))
    without_swap = float(np.max(np.abs(build_qft3(False).unitary()
                                       - dft_matrix(bit_reversed=True))))
    reports.write_json(reports.output_path(out, "qft_report.json"), OrderedDict([
        ("max_deviation_with_swap", reports.format_number(with_swap)),
        ("max_deviation_without_swap", reports.format_number(without_swap)),
    ]))
    return with_swap <= QFT_TOLERANCE and without_swap <= QFT_TOLERANCE


def cmd_verify_sequence(out, sequence=None, order=PRODUCT_ORDER, permutation=None, y=None):
    """Verify a native oracle sequence.

    With a permutation the sequence is checked on that instance; otherwise
    every instance it realizes is searched for. Without a sequence the four
    reference sequences are searched. Sequences are read as operator
    products by default, as the reference panels are.

    :raises: :obj:`orderfinding.exceptions.ConfigError` on a bad y.
    :return: Whether the instance verifies, or the search found a match.
    :rtype: bool
    """
    if y is not None:
        check_y(y)
    if sequence is None:
        sequences = OrderedDict(REFERENCE_ORACLE_SEQUENCES)
    else:
        sequences = OrderedDict([("sequence", NativeSequence.parse(sequence, order))])
    document = OrderedDict()
    passed = True
    for name, seq in sequences.items():
        entry = OrderedDict([("sequence", str(seq)), ("order", seq.order)])
        if permutation is not None:
            spec = OracleSpec(Permutation.parse(permutation), 0 if y is None else y)
            verified = verify_oracle_sequence(seq, spec.pi, spec.y)
            entry["permutation"] = str(spec.pi)
            entry["y"] = spec.y
            entry["verified"] = verified
        else:
            matches = search_sequence_instances(seq)
            if y is not None:
                matches = [spec for spec in matches if spec.y == y]
            entry["matches"] = [OrderedDict([("permutation", str(spec.pi)), ("y", spec.y),
                                             ("order", spec.order)]) for spec in matches]
            verified = bool(matches)
        passed = passed and verified
        document[name] = entry
    reports.write_json(reports.output_path(out, "sequence_report.json"), document)
    return passed

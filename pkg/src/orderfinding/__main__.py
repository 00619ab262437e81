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
"""Command line interface."""
import argparse
import logging
import sys

from orderfinding import __version__
from orderfinding import commands
from orderfinding.exceptions import OrderFindingError
from orderfinding.native import ORDERS, PRODUCT_ORDER

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2


def _add_output(parser):
    parser.add_argument(
        "--out",
        "-o",
        default=".",
        help="Output directory for the written reports."
    )


def parse_args(args):
    """Parse the subcommand and its options.

    :param args: Command line arguments, without the program name.
    :type args: list of str
    :rtype: :obj:`argparse.Namespace`
    """
    parser = argparse.ArgumentParser(
        description="orderfinding - simulate and verify the order-finding experiment")
    parser.add_argument(
        "--version",
        action="version",
        version="orderfinding {ver}".format(ver=__version__))
    parser.add_argument("-v", "--verbose", dest="loglevel", action="store_const",
                        const=logging.INFO, help="Log progress.")
    parser.add_argument("-vv", "--very-verbose", dest="loglevel", action="store_const",
                        const=logging.DEBUG, help="Log every intermediate result.")
    subparsers = parser.add_subparsers(dest="command")
    subparsers.required = True

    run = subparsers.add_parser("run", help="Run one (permutation, y) instance end to end.")
    run.add_argument("--perm", default="()", help="Permutation, e.g. \"(0 1)(2 3)\" or 1,0,3,2.")
    run.add_argument("--y", type=int, default=0, help="Start element 0..3.")
    run.add_argument("--molecule", help="Molecule JSON file with shifts, J and linewidth_hz.")
    run.add_argument("--grid", help="Spectrum grid as fmin,fmax,points. Write --grid=-50,50,101 "
                                     "when fmin is negative.")
    _add_output(run)

    _add_output(subparsers.add_parser(
        "sweep", help="Compare simulation with the analytic distribution for all instances."))

    prep = subparsers.add_parser("prep-verify", help="Verify preparation sequences.")
    prep.add_argument("--seq", action="append",
                      help="Preparation sequence such as \"C51 C45 C24 N3\", repeatable. "
                           "Defaults to the nine reference sequences.")
    _add_output(prep)

    _add_output(subparsers.add_parser("guess-table", help="Optimal guess strategy."))
    _add_output(subparsers.add_parser("classical", help="Classical query bounds."))
    _add_output(subparsers.add_parser("qft-check", help="Compare the QFT circuits with the DFT."))

    verify = subparsers.add_parser("verify-sequence", help="Verify a native oracle sequence.")
    verify.add_argument("--seq", help="Native sequence such as \"C24 P34 P54 C35 P54\". "
                                      "Defaults to the reference sequences.")
    verify.add_argument("--order", choices=ORDERS, default=PRODUCT_ORDER,
                        help="Whether the rightmost gate acts first (product, the default) "
                             "or the first listed one (time).")
    verify.add_argument("--perm", help="Permutation to verify against; searches all if omitted.")
    verify.add_argument("--y", type=int, help="Start element 0..3.")
    _add_output(verify)
    return parser.parse_args(args)


def setup_logging(loglevel):
    """Configure the root logger.

    :param loglevel: Minimum level to emit, the logging default when None.
    :type loglevel: int
    """
    logformat = "[%(asctime)s] %(levelname)s:%(name)s:%(message)s"
    logging.basicConfig(level=loglevel, stream=sys.stdout,
                        format=logformat, datefmt="%Y-%m-%d %H:%M:%S")


def dispatch(args):
    """Run the selected subcommand.

    :return: Whether its checks passed.
    :rtype: bool
    """
    if args.command == "run":
        config = commands.RunConfig(args.perm, args.y, args.molecule, args.out, args.grid)
        return commands.cmd_run(config)
    if args.command == "sweep":
        return commands.cmd_sweep(args.out)
    if args.command == "prep-verify":
        return commands.cmd_prep_verify(args.out, args.seq)
    if args.command == "guess-table":
        return commands.cmd_guess_table(args.out)
    if args.command == "classical":
        return commands.cmd_classical(args.out)
    if args.command == "qft-check":
        return commands.cmd_qft_check(args.out)
    return commands.cmd_verify_sequence(args.out, args.seq, args.order, args.perm, args.y)


def main(args):
    """Run the command line and map the outcome to an exit status.

    :param args: Command line arguments, without the program name.
    :type args: list of str
    :return: 0 when the checks pass, 1 when one fails, 2 on an error.
    :rtype: int
    """
    args = parse_args(args)
    setup_logging(args.loglevel)
    try:
        passed = dispatch(args)
    except (OrderFindingError, OSError) as exception:
        logging.getLogger("orderfinding").error("%s", exception)
        return EXIT_ERROR
    return EXIT_OK if passed else EXIT_FAILED


def run():
    """Entry point for console_scripts."""
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    run()

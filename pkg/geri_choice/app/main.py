"""
Application Entry Point
Parses the command line and routes to the subcommand handlers.

    geri solve data/models/appendix_shannon.json --out results/shannon.json
    geri table1 --zeta 1.0 0.5 --seed 42
    geri appendix
    geri verify --generator shannon --trials 100
"""

import argparse
import sys

from geri_choice.config.logging_config import log as logger
from geri_choice.config.settings import ExperimentDefaults, Paths
from geri_choice.core.exceptions import GeriError, NoConvergence

from .commands import (
    EXIT_INPUT,
    EXIT_NO_CONVERGENCE,
    cmd_appendix,
    cmd_solve,
    cmd_table1,
    cmd_verify,
)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="Random seed")
    common.add_argument("--tol", type=float, default=None, help="Solver tolerance")
    common.add_argument(
        "--max-iter", type=int, default=None, help="Solver iteration cap"
    )
    common.add_argument("--out", type=str, default=None, help="Output file")
    common.add_argument("--threads", type=int, default=1, help="Worker threads")

    parser = argparse.ArgumentParser(
        prog="geri", description="Rational inattention with generalized entropy costs"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    solve = commands.add_parser("solve", parents=[common], help="Solve a model file")
    solve.add_argument("model", help="JSON model file")
    solve.set_defaults(handler=cmd_solve)

    table1 = commands.add_parser(
        "table1",
        parents=[common],
        help="Monte Carlo comparison of choice probabilities",
    )
    table1.add_argument("--zeta", type=float, nargs="+", default=[1.0])
    table1.add_argument("--n-states", type=int, default=ExperimentDefaults.N_STATES)
    table1.add_argument(
        "--replications", type=int, default=ExperimentDefaults.N_REPLICATIONS
    )
    table1.add_argument(
        "--no-symmetrize",
        action="store_true",
        help="Use plain i.i.d. draws instead of rotated copies of each draw",
    )
    table1.add_argument(
        "--scale",
        type=float,
        default=1.0,
        help="Valuations are drawn from Uniform(0, scale)",
    )
    table1.set_defaults(handler=cmd_table1)

    appendix = commands.add_parser(
        "appendix", parents=[common], help="Consideration sets and regularity example"
    )
    appendix.set_defaults(handler=cmd_appendix)

    verify = commands.add_parser(
        "verify", parents=[common], help="Run the generator and solver checks"
    )
    verify.add_argument(
        "--generator", default="shannon", help='"shannon" or a generator JSON file'
    )
    verify.add_argument("--trials", type=int, default=100)
    verify.set_defaults(handler=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    Paths.make_dirs()
    try:
        return args.handler(args)
    except NoConvergence as e:
        logger.error(f"❌ {e}")
        return EXIT_NO_CONVERGENCE
    except (GeriError, ValueError) as e:
        logger.error(f"❌ {e}")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

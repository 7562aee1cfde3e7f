"""Argument parsing, dispatch and exit codes for the ``lightcone`` command."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Dict, List, NoReturn, Optional, Sequence, TextIO

from .. import __version__, config
from ..analysis import BOUNDS
from ..ansatz import ANSATZ_KINDS
from ..errors import LightconeError, ResourceLimitError
from ..optimize import INITS, METHODS, OBJECTIVES
from .commands import COMMANDS, ORIENT_METHODS
from .manifest import RunManifest
from .output import OutputWriter, write_error
from .settings import UsageError, config_tokens, read_config_file

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_RESOURCE = 2

SCHEMES = ("uniform", "degreepair", "head-in-degree", "pergate")


class CliArgumentParser(argparse.ArgumentParser):
    """Parser that raises instead of printing usage and exiting."""

    def error(self, message: str) -> NoReturn:
        raise UsageError(f"{self.prog}: {message}")


def _common_options() -> argparse.ArgumentParser:
    common = CliArgumentParser(add_help=False)
    group = common.add_argument_group("run options")
    group.add_argument("--config", type=Path, help="key = value file of flag defaults")
    group.add_argument("--seed", type=int, default=0, help="root random seed")
    group.add_argument("--threads", type=int, default=1, help="worker threads")
    group.add_argument("--out", type=Path, help="directory for output files")
    group.add_argument("--verbose", action="store_true", help="debug logging")
    group.add_argument("--quiet", action="store_true", help="errors only")
    return common


def _graph_options() -> argparse.ArgumentParser:
    parent = CliArgumentParser(add_help=False)
    group = parent.add_argument_group("graph input")
    group.add_argument("--graph", type=Path, help="edge-list file")
    group.add_argument("--named", help="reference graph from the bundled library")
    group.add_argument(
        "--relabel", action="store_true", help="accept arbitrary node names"
    )
    return parent


def _ansatz_options() -> argparse.ArgumentParser:
    parent = CliArgumentParser(add_help=False)
    group = parent.add_argument_group("ansatz")
    group.add_argument("--circuit", type=Path, help="circuit JSON from 'ansatz'")
    group.add_argument("--ansatz", choices=ANSATZ_KINDS, default="bipolar-zy")
    group.add_argument("--p", type=int, default=1, help="rounds")
    group.add_argument("--scheme", choices=SCHEMES, default="uniform")
    group.add_argument("--root", type=int, help="orientation source or light-cone root")
    group.add_argument("--sink", type=int, help="bipolar sink (adjacent to the root)")
    group.add_argument("--orientation", choices=("dfs", "bfs"), default="dfs")
    return parent


def _angle_options() -> argparse.ArgumentParser:
    parent = CliArgumentParser(add_help=False)
    group = parent.add_argument_group("angles")
    group.add_argument("--theta", type=float, help="one angle for every parameter")
    group.add_argument("--angles", help="comma-separated angle per parameter")
    return parent


def _simulation_options() -> argparse.ArgumentParser:
    parent = CliArgumentParser(add_help=False)
    group = parent.add_argument_group("simulation")
    group.add_argument(
        "--backend", choices=("statevector", "pauli"), default="statevector"
    )
    group.add_argument(
        "--truncation", default="none", help="none | klocal:K | weight:W | coeff:C"
    )
    group.add_argument("--c-max", type=int, help="known maximum cut")
    return parent


def _optimizer_options() -> argparse.ArgumentParser:
    parent = CliArgumentParser(add_help=False)
    group = parent.add_argument_group("optimizer")
    group.add_argument("--optimizer", choices=METHODS, default=config.OPTIMIZER_METHOD)
    group.add_argument("--max-iterations", type=int, help="evaluations per restart")
    group.add_argument("--tolerance", type=float, default=config.OPTIMIZER_TOLERANCE)
    group.add_argument("--init", choices=INITS, default="uniform")
    group.add_argument("--objective", choices=OBJECTIVES, default="expectation")
    group.add_argument("--confidence", type=float, default=config.CVAR_CONFIDENCE)
    group.add_argument("--shots", type=int, default=config.DEFAULT_SHOTS)
    group.add_argument("--restart-cap", type=int, default=config.RESTART_CAP)
    return parent


def build_parser() -> CliArgumentParser:
    parser = CliArgumentParser(
        prog="lightcone",
        description="Bipolar and light-cone ZY ansatze for MaxCut.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    common = _common_options()
    graph = _graph_options()
    ansatz = _ansatz_options()
    angles = _angle_options()
    simulation = _simulation_options()
    optimizer = _optimizer_options()

    orient = commands.add_parser(
        "orient", parents=[common, graph], help="orient a graph as a DAG"
    )
    orient.add_argument("--method", choices=ORIENT_METHODS, default="dfs")
    orient.add_argument("--root", type=int, help="source or light-cone root")
    orient.add_argument("--sink", type=int, help="bipolar sink")

    commands.add_parser(
        "ansatz", parents=[common, graph, ansatz], help="build a circuit as JSON"
    )

    simulate = commands.add_parser(
        "simulate",
        parents=[common, graph, ansatz, angles, simulation],
        help="expected cut at given angles",
    )
    simulate.add_argument(
        "--ratio", action="store_true", help="report the approximation ratio"
    )
    simulate.add_argument(
        "--variance-samples", type=int, help="Monte-Carlo variance over random angles"
    )
    simulate.add_argument(
        "--shots", type=int, help="measure this many times and write samples.txt"
    )

    guarantee = commands.add_parser(
        "guarantee", parents=[common], help="worst-case approximation ratio"
    )
    guarantee.add_argument("--method", choices=sorted(BOUNDS), default="zy1-0local")
    guarantee.add_argument("--degree", type=int, default=3)
    guarantee.add_argument("--n-plus-ratio", type=float, default=0.0)
    guarantee.add_argument("--k-max", type=int, help="cycle index search cap")
    guarantee.add_argument("--k", type=int, default=2, help="cosine power")
    guarantee.add_argument("--sweep-points", type=int, help="write sweep.csv")

    commands.add_parser(
        "optimize",
        parents=[common, graph, ansatz, angles, simulation, optimizer],
        help="maximise the expected cut",
    )

    tts = commands.add_parser(
        "tts",
        parents=[common, optimizer],
        help="time-to-solution over random regular graphs",
    )
    tts.add_argument("--n", type=int, nargs="+", required=True, help="node counts")
    tts.add_argument("--graphs", type=int, default=50, help="graphs per node count")
    tts.add_argument("--degree", type=int, default=3)
    tts.add_argument("--ansatz", choices=ANSATZ_KINDS, default="bipolar-zy")
    tts.add_argument("--scheme", choices=SCHEMES, default="pergate")
    tts.add_argument("--traces", action="store_true", help="include restart traces")

    commands.add_parser(
        "oracle", parents=[common, graph], help="brute-force maximum cut"
    )

    postprocess = commands.add_parser(
        "postprocess",
        parents=[common, graph, ansatz, angles],
        help="greedy bit-flip improvement of samples",
    )
    postprocess.add_argument("--samples", type=Path, help="bitstring file")
    postprocess.add_argument("--shots", type=int, default=config.DEFAULT_SHOTS)
    postprocess.add_argument("--c-max", type=int, help="known maximum cut")

    cycles = commands.add_parser(
        "cycles", parents=[common, graph], help="cycle and block diagnostics"
    )
    cycles.add_argument("--cap", type=int, default=config.CYCLE_CAP)

    entropy = commands.add_parser(
        "entropy",
        parents=[common, graph, ansatz, angles],
        help="half-chain entanglement entropy",
    )
    entropy.add_argument("--cut", type=int, help="qubits on the left (default n/2)")
    entropy.add_argument("--all-cuts", action="store_true", help="write entropy.csv")

    return parser


def _subparsers(parser: argparse.ArgumentParser) -> Dict[str, argparse.ArgumentParser]:
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            return dict(action.choices)
    return {}


def parse_arguments(argv: Sequence[str]) -> argparse.Namespace:
    """Parse ``argv``, folding in ``--config`` entries below explicit flags."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.config is None:
        return args

    entries = read_config_file(args.config)
    tokens = config_tokens(entries, _subparsers(parser)[args.command])
    position = list(argv).index(args.command)
    merged: List[str] = [
        *argv[: position + 1],
        *tokens,
        *argv[position + 1 :],
    ]
    return parser.parse_args(merged)


def configure_logging(args: argparse.Namespace) -> None:
    level = logging.INFO
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.ERROR
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


def run(
    argv: Optional[Sequence[str]] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    """Run one command line and return its exit status.

    Returns:
        0 on success, 2 when a configured resource cap is hit and 1 for any
        other error; errors are written to stderr as one JSON object
    """
    arguments = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parse_arguments(arguments)
        configure_logging(args)
        settings = {
            key: str(value) if isinstance(value, Path) else value
            for key, value in sorted(vars(args).items())
        }
        manifest = RunManifest(command=args.command, arguments=settings, seed=args.seed)
        output = OutputWriter(manifest, args.out, stdout=stdout)
        COMMANDS[args.command](args, output)
        output.close()
    except ResourceLimitError as exc:
        write_error(exc, EXIT_RESOURCE, stderr)
        return EXIT_RESOURCE
    except (LightconeError, ValueError, OSError) as exc:
        write_error(exc, EXIT_INVALID, stderr)
        return EXIT_INVALID
    return EXIT_OK

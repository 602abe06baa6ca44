"""Main module for the command-line interface."""
import argparse
import logging
import sys
from typing import List, Optional, Sequence

from seqrsp import __version__
from seqrsp.commands.base import BaseCommand
from seqrsp.commands.cascade import CascadeCommand
from seqrsp.commands.classical_bound import ClassicalBoundCommand
from seqrsp.commands.montecarlo import MonteCarloCommand
from seqrsp.commands.resources import ResourcesCommand
from seqrsp.commands.sweep import SweepCommand
from seqrsp.commands.table import TableCommand
from seqrsp.util.config import Config
from seqrsp.util.exception_handler import ExceptionHandler
from seqrsp.util.output import FORMATS, write_atomic

logger = logging.getLogger(__name__)

COMMANDS: List[BaseCommand] = [
    ClassicalBoundCommand(),
    CascadeCommand(),
    TableCommand(),
    ResourcesCommand(),
    SweepCommand(),
    MonteCarloCommand(),
]

VERBOSITY = {0: None, 1: logging.INFO}


def build_parser() -> argparse.ArgumentParser:
    """
    Build the parser with one sub-parser per command.

    :return: The parser.
    """
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--out", default=None, metavar="<path>", help="Write the result to a file instead of stdout.")
    shared.add_argument("--format", default=None, choices=FORMATS, help="Output format; each command has a default.")
    shared.add_argument("--deg", action="store_true", help="Read angles in degrees instead of radians.")
    shared.add_argument("-v", "--verbose", action="count", default=0, help="Log more; repeat for debug output.")

    parser = argparse.ArgumentParser(prog="seqrsp", description=__doc__)
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    subparsers = parser.add_subparsers(dest="command_name", metavar="<command>")
    subparsers.required = True
    for command in COMMANDS:
        command.register(subparsers, [shared])
    return parser


def configure_logging(verbose: int) -> None:
    """
    Send log records to stderr, at the level chosen by -v or by the log_level option.

    :param verbose: Number of -v flags.
    """
    level = VERBOSITY.get(verbose, logging.DEBUG) or Config.get("log_level")
    logging.basicConfig(stream=sys.stderr, format="%(message)s", level=level, force=True)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one command.

    Data goes to stdout or to --out, diagnostics to stderr.

    :param argv: Arguments without the program name; sys.argv when omitted.
    :return: Exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return int(exit_.code or 0)

    command: BaseCommand = args.command
    try:
        configure_logging(args.verbose)
        record = command.execute(args)
        text = record.render(args.format or command.default_format)
        if args.out is None:
            sys.stdout.write(text)
        else:
            write_atomic(args.out, text)
            logger.info("Wrote %s.", args.out)
    except Exception as error:  # pylint: disable=broad-except
        return ExceptionHandler.handle(command.name, error)
    return 0


if __name__ == "__main__":
    sys.exit(main())

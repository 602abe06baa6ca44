"""Base class of the sub-commands."""
import argparse
from typing import Any, Dict, Sequence, Tuple

from seqrsp.util.output import OutputRecord


class BaseCommand:
    """
    A sub-command of the command-line interface.

    Sub-classes declare their name, help text, default output format and options, and implement execute.
    Options use the (flag, settings) layout, with settings passed on to argparse.
    """

    name = ""
    help = ""
    default_format = "csv"
    options: Tuple[Tuple[str, Dict[str, Any]], ...] = ()

    def register(self, subparsers: Any, parents: Sequence[argparse.ArgumentParser]) -> argparse.ArgumentParser:
        """
        Add the sub-command to the parser.

        :param subparsers: Result of ArgumentParser.add_subparsers.
        :param parents: Parsers holding the options shared by every sub-command.
        :return: The parser of the sub-command.
        """
        parser = subparsers.add_parser(self.name, help=self.help, description=self.help, parents=list(parents))
        for flag, settings in self.options:
            parser.add_argument(flag, **settings)
        parser.set_defaults(command=self)
        return parser

    def execute(self, args: argparse.Namespace) -> OutputRecord:
        """
        Run the sub-command.

        :param args: Parsed arguments.
        :return: The record to print.
        """
        raise NotImplementedError

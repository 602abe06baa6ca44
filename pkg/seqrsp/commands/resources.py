"""Sub-command tabulating the quantum resources left for each Bob."""
import argparse

from seqrsp.analysis.correlations import MAX_RESOURCE_INDEX, ResourceMeasures
from seqrsp.commands.arguments import Arguments
from seqrsp.commands.base import BaseCommand
from seqrsp.commands.cascade import PROTOCOL_OPTIONS
from seqrsp.util.exceptions import ValidationError
from seqrsp.util.output import OutputRecord

COLUMNS = ("bob", "max_discord", "max_concurrence", "own_lambda", "discord_after", "concurrence_after", "feasible")


class ResourcesCommand(BaseCommand):
    """Largest geometric discord and concurrence Bob i can find after successful predecessors."""

    name = "resources"
    help = "Maximum discord and concurrence each Bob finds, and what his measurement leaves, along the infimum chain."
    options = PROTOCOL_OPTIONS + (
        ("--max-bob", {"type": int, "default": 7, "metavar": "<N>", "help": "Last Bob tabulated (1 to 8)."}),
    )

    def execute(self, args: argparse.Namespace) -> OutputRecord:
        if not 1 <= args.max_bob <= MAX_RESOURCE_INDEX:
            raise ValidationError(
                "--max-bob must lie in [1, {}], got {}.".format(MAX_RESOURCE_INDEX, args.max_bob), "max_bob"
            )
        config = Arguments.config(args)
        rows = []
        for i in range(1, args.max_bob + 1):
            report = ResourceMeasures.max_remaining_resource(i, config=config)
            rows.append({column: value for column, value in report.to_dict().items() if column in COLUMNS})
        parameters = config.describe()
        parameters["max_bob"] = args.max_bob
        return OutputRecord(self.name, parameters, COLUMNS, rows)

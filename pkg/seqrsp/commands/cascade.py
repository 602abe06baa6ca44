"""Sub-command evaluating every Bob of a sharpness chain."""
import argparse

from seqrsp.analysis.report import CascadeReporter
from seqrsp.commands.arguments import Arguments
from seqrsp.commands.base import BaseCommand
from seqrsp.protocol.cascade import Target
from seqrsp.util.output import OutputRecord

# Options shared with the Monte-Carlo command.
PROTOCOL_OPTIONS = (
    (
        "--family",
        {
            "default": "singlet",
            "metavar": "<family>",
            "help": "Initial state: singlet, werner:C, nonmax:XI, bd:C1,C2,C3 or bell:KIND.",
        },
    ),
    ("--theta", {"default": None, "metavar": "<angle>", "help": "Polar angle of the target circle (default pi/2)."}),
    (
        "--target",
        {"default": Target.PSI.value, "choices": [target.value for target in Target], "help": "Target state."},
    ),
)

COLUMNS = (
    "index",
    "lambda",
    "f_av",
    "f_postselected",
    "f_classical",
    "beats_classical",
    "p_up",
    "lambda_min",
    "c1",
    "c2",
    "c3",
    "discord",
    "concurrence",
    "linear_entropy",
)


class CascadeCommand(BaseCommand):
    """Print fidelities, requirements and shared-state coefficients of each Bob."""

    name = "cascade"
    help = "Average fidelity of every Bob of a sharpness chain, compared with the classical bound."
    default_format = "json"
    options = PROTOCOL_OPTIONS + (
        ("--lambdas", {"required": True, "metavar": "<l1,l2,...>", "help": "Sharpness of each Bob in order."}),
    )

    def execute(self, args: argparse.Namespace) -> OutputRecord:
        config = Arguments.config(args)
        chain = Arguments.lambdas(args.lambdas)
        report = CascadeReporter.run(config, chain)

        parameters = config.describe()
        parameters.update({"lambdas": list(report.chain), "successful_bobs": report.successful_bobs})
        return OutputRecord(self.name, parameters, COLUMNS, [bob.to_dict() for bob in report.bobs])

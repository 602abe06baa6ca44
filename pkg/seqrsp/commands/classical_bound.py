"""Sub-command printing the best classical fidelity against the polar angle."""
import argparse
import math

from seqrsp.analysis.classical import ClassicalBaseline
from seqrsp.commands.arguments import Arguments
from seqrsp.commands.base import BaseCommand
from seqrsp.util.exceptions import ValidationError
from seqrsp.util.output import OutputRecord

DEFAULT_SWEEP = "0:{!r}:0.01".format(math.pi)


class ClassicalBoundCommand(BaseCommand):
    """Tabulate f_cl(theta) for one angle or a sweep of angles."""

    name = "classical-bound"
    help = "Best fidelity of a classical strategy sending one bit, as a function of the polar angle."
    options = (
        ("--theta", {"default": None, "metavar": "<angle>", "help": "Single polar angle."}),
        (
            "--sweep",
            {"default": None, "metavar": "<start:stop:step>", "help": "Range of polar angles (default 0:pi:0.01)."},
        ),
    )

    def execute(self, args: argparse.Namespace) -> OutputRecord:
        if args.theta is not None and args.sweep is not None:
            raise ValidationError("--theta and --sweep cannot be combined.", "theta")
        if args.theta is not None:
            points = [Arguments.theta(args.theta, args.deg)]
        elif args.sweep is not None:
            points = Arguments.sweep(args.sweep, args.deg)
        else:
            points = Arguments.sweep(DEFAULT_SWEEP)

        rows = [{"theta": theta, "f_classical": ClassicalBaseline.classical_bound(theta)} for theta in points]
        return OutputRecord(
            self.name,
            {"theta": args.theta, "sweep": args.sweep, "deg": args.deg},
            ("theta", "f_classical"),
            rows,
        )

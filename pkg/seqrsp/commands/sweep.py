"""Sub-command tabulating the minimum sharpness of each Bob along a parameter axis."""
import argparse

from seqrsp.analysis.solver import Axis, SharpnessSolver
from seqrsp.commands.base import BaseCommand
from seqrsp.protocol.states import StateFactory, StateInspector
from seqrsp.util.config import Config
from seqrsp.util.exceptions import ValidationError
from seqrsp.util.output import OutputRecord


class SweepCommand(BaseCommand):
    """Curves of lambda_min for every Bob against theta, xi or the Werner parameter."""

    name = "sweep"
    help = "Minimum sharpness of each Bob and the number of successful Bobs along the theta, xi or Werner axis."
    options = (
        ("--axis", {"required": True, "choices": [axis.value for axis in Axis], "help": "Parameter swept."}),
        ("--points", {"type": int, "default": 91, "metavar": "<N>", "help": "Evenly spaced points, ends included."}),
        ("--max-bob", {"type": int, "default": 6, "metavar": "<K>", "help": "Number of Bobs tabulated."}),
    )

    def execute(self, args: argparse.Namespace) -> OutputRecord:
        if not 1 <= args.max_bob <= Config.max_chain():
            raise ValidationError(
                "--max-bob must lie in [1, {}], got {}.".format(Config.max_chain(), args.max_bob), "max_bob"
            )
        axis = Axis(args.axis)
        curve = SharpnessSolver.sweep(axis, args.points, args.max_bob)

        bobs = ["lambda_{}".format(i) for i in range(1, args.max_bob + 1)]
        # The Werner curves are also read against the mixedness of the initial state.
        extra = ("linear_entropy",) if axis is Axis.WERNER_C else ()
        rows = []
        for x, result in curve:
            row = {axis.value: x, "n": result.n_max}
            if extra:
                row["linear_entropy"] = StateInspector.linear_entropy(StateFactory.make_initial(result.config.family))
            # Bobs after the first one who cannot beat the bound have no requirement.
            row.update({column: None for column in bobs})
            row.update(zip(bobs, result.lambda_mins))
            rows.append(row)
        parameters = {"axis": axis.value, "points": args.points, "max_bob": args.max_bob}
        return OutputRecord(self.name, parameters, (axis.value, *extra, "n", *bobs), rows)

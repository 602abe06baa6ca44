"""Sub-command checking the closed-form fidelities against sampled trajectories."""
import argparse

from seqrsp.analysis.trajectory import TrajectoryOracle
from seqrsp.commands.arguments import Arguments
from seqrsp.commands.base import BaseCommand
from seqrsp.commands.cascade import PROTOCOL_OPTIONS
from seqrsp.util.exceptions import ValidationError
from seqrsp.util.output import OutputRecord

COLUMNS = ("family", "theta", "target", "chain", "index", "mean", "standard_error", "p_up", "analytic", "z")


class MonteCarloCommand(BaseCommand):
    """Sample measurement trajectories and report z-scores against the analytic fidelities."""

    name = "montecarlo"
    help = "Monte-Carlo estimate of every Bob's average fidelity, with z-scores against the closed forms."
    default_format = "json"
    options = PROTOCOL_OPTIONS + (
        ("--lambdas", {"default": None, "metavar": "<l1,l2,...>", "help": "Sharpness of each Bob in order."}),
        ("--trials", {"type": int, "default": None, "metavar": "<count>", "help": "Trajectories per configuration."}),
        ("--seed", {"type": int, "default": None, "metavar": "<seed>", "help": "Seed; drawn at random when omitted."}),
        ("--panel", {"action": "store_true", "help": "Run the fixed regression panel instead of one configuration."}),
    )

    def execute(self, args: argparse.Namespace) -> OutputRecord:
        seed = TrajectoryOracle.fresh_seed() if args.seed is None else args.seed
        if args.panel:
            runs = TrajectoryOracle.run_panel(args.trials, seed)
            parameters = {"panel": True, "trials": runs[0].trials}
        else:
            if args.lambdas is None:
                raise ValidationError("--lambdas is required unless --panel is given.", "lambdas")
            config = Arguments.config(args)
            runs = [TrajectoryOracle.simulate(config, Arguments.lambdas(args.lambdas), args.trials, seed)]
            parameters = config.describe()
            parameters.update({"panel": False, "lambdas": list(runs[0].chain), "trials": runs[0].trials})

        rows = []
        for run in runs:
            describe = run.config.describe()
            chain = ",".join("%g" % lam for lam in run.chain)
            for estimate in run.estimates:
                rows.append(dict(describe, chain=chain, **estimate.to_dict()))
        parameters["max_abs_z"] = max(run.max_abs_z for run in runs)
        return OutputRecord(self.name, parameters, COLUMNS, rows, seed=seed)

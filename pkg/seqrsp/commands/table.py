"""Sub-command reproducing the sharpness and boundary tables."""
import argparse
import math
from typing import Any, Dict, List

from seqrsp.analysis.solver import Axis, Interval, SharpnessSolver
from seqrsp.commands.base import BaseCommand
from seqrsp.protocol.cascade import ProtocolConfig
from seqrsp.protocol.states import Singlet
from seqrsp.util.output import OutputRecord
from seqrsp.util.resources import Resources

SHARPNESS_TABLES = {
    "I": ProtocolConfig(Singlet()),
    "B": ProtocolConfig(Singlet(), theta=math.atan(math.sqrt(2))),
}
BOUNDARY_TABLES = {"II": Axis.THETA, "III": Axis.XI, "IV": Axis.WERNER_C}


class TableCommand(BaseCommand):
    """Recompute one of the published tables, optionally next to the published values."""

    name = "table"
    help = "Minimum sharpness per Bob (I, B) or intervals with a fixed number of successful Bobs (II, III, IV)."
    options = (
        ("--which", {"required": True, "choices": ["I", "II", "III", "IV", "B"], "help": "Table to compute."}),
        ("--compare", {"action": "store_true", "help": "Add the published values next to the computed ones."}),
    )

    def execute(self, args: argparse.Namespace) -> OutputRecord:
        published = Resources.get_published_tables()[args.which]["rows"] if args.compare else None
        if args.which in SHARPNESS_TABLES:
            columns, rows = self.__sharpness_rows(SHARPNESS_TABLES[args.which], published)
        else:
            columns, rows = self.__boundary_rows(BOUNDARY_TABLES[args.which], published)
        return OutputRecord(self.name, {"which": args.which, "compare": args.compare}, columns, rows)

    @staticmethod
    def __sharpness_rows(config: ProtocolConfig, published) -> Any:
        result = SharpnessSolver.min_chain(config)
        rows: List[Dict[str, Any]] = []
        for i, lam in enumerate(result.lambda_mins[: result.n_max], start=1):
            rows.append({"i": i, "lambda_min": lam, "range": "({:.3f}, 1]".format(lam)})
        columns = ("i", "lambda_min", "range")
        if published is not None:
            reference = {row["i"]: row["lambda_min"] for row in published}
            for row in rows:
                row["published"] = reference.get(row["i"])
                row["deviation"] = None if row["published"] is None else row["lambda_min"] - row["published"]
            columns += ("published", "deviation")
        return columns, rows

    @staticmethod
    def __boundary_rows(axis: Axis, published) -> Any:
        rows = [
            {"n": row.n, "intervals": "; ".join(interval.render() for interval in row.intervals)}
            for row in SharpnessSolver.boundary_table(axis)
        ]
        columns = ("n", "intervals")
        if published is not None:
            reference = {
                row["n"]: "; ".join(Interval(*interval).render() for interval in row["intervals"]) for row in published
            }
            for row in rows:
                row["published"] = reference.get(row["n"])
            columns += ("published",)
        return columns, rows

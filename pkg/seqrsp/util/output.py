"""Utility module for rendering command results as CSV or JSON."""
import csv
import io
import json
import math
import os
import tempfile
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import seqrsp

SCHEMA_VERSION = 1
FORMATS = ("csv", "json")


def _plain(value: Any) -> Any:
    """Replace values JSON cannot represent."""
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, dict):
        return {key: _plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]
    return value


def format_cell(value: Any) -> str:
    """
    Format one CSV cell.

    :param value: Cell value.
    :return: Floats with 6 significant digits, booleans in lower case, None as empty cell.
    """
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return "%.6g" % value
    return str(value)


@dataclass
class OutputRecord:
    """Result of one command: the echoed command and parameters, a table of rows and provenance."""

    command: str
    parameters: Dict[str, Any]
    columns: Sequence[str]
    rows: List[Dict[str, Any]] = field(default_factory=list)
    seed: Optional[int] = None

    def to_json(self) -> str:
        """Render as a JSON document with sorted keys."""
        document = {
            "schema": SCHEMA_VERSION,
            "command": self.command,
            "parameters": self.parameters,
            "columns": list(self.columns),
            "rows": self.rows,
            "version": seqrsp.__version__,
        }
        if self.seed is not None:
            document["seed"] = self.seed
        return json.dumps(_plain(document), sort_keys=True, indent=2) + "\n"

    def to_csv(self) -> str:
        """Render the rows as CSV with a header row."""
        stream = io.StringIO()
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([format_cell(row.get(column)) for column in self.columns])
        return stream.getvalue()

    def render(self, output_format: str) -> str:
        """
        Render in one of the supported formats.

        :param output_format: 'csv' or 'json'.
        :return: The rendered text.
        """
        return self.to_json() if output_format == "json" else self.to_csv()


def write_atomic(path: str, text: str) -> None:
    """
    Write a file so that readers never observe a partially written version.

    :param path: Destination path.
    :param text: File content.
    """
    directory = os.path.dirname(os.path.abspath(path))
    handle, temporary = tempfile.mkstemp(dir=directory, prefix=".seqrsp-", suffix=".tmp")
    try:
        with os.fdopen(handle, "w", encoding="utf-8", newline="") as stream:
            stream.write(text)
        os.replace(temporary, path)
    except BaseException:
        if os.path.exists(temporary):
            os.remove(temporary)
        raise

"""Class which tests the output utilities."""
import json
import math

import seqrsp
from seqrsp.util.output import OutputRecord, format_cell, write_atomic


class TestOutputRecord:
    """Class which tests the OutputRecord class."""

    @staticmethod
    def record(seed=None):
        """Small record used by the tests."""
        rows = [{"i": 1, "lambda_min": 0.5, "ok": True}, {"i": 2, "lambda_min": math.inf, "ok": False}]
        return OutputRecord("table", {"which": "I"}, ("i", "lambda_min", "ok"), rows, seed=seed)

    def test_format_cell(self):
        """Test the formatting of floats, booleans and missing values."""
        assert format_cell(0.123456789) == "0.123457"
        assert format_cell(True) == "true"
        assert format_cell(None) == ""
        assert format_cell(3) == "3"

    def test_csv(self):
        """Test that the CSV output has a header and one line per row."""
        lines = self.record().to_csv().splitlines()
        assert lines == ["i,lambda_min,ok", "1,0.5,true", "2,inf,false"]

    def test_csv_header_without_rows(self):
        """Test that the header is written even without rows."""
        assert OutputRecord("x", {}, ("a", "b")).to_csv() == "a,b\n"

    def test_json(self):
        """Test the JSON document: schema, version, sorted keys and non-finite values as null."""
        text = self.record().to_json()
        document = json.loads(text)
        assert document["schema"] == 1
        assert document["version"] == seqrsp.__version__
        assert document["rows"][1]["lambda_min"] is None
        assert "seed" not in document
        assert list(document) == sorted(document)

    def test_json_seed(self):
        """Test that the seed of a stochastic command is echoed."""
        assert json.loads(self.record(seed=42).to_json())["seed"] == 42

    def test_json_deterministic(self):
        """Test that rendering twice gives identical text."""
        assert self.record(7).render("json") == self.record(7).render("json")

    def test_write_atomic(self, tmp_path):
        """Test that the file holds the text and no temporary file is left behind."""
        path = tmp_path / "out.csv"
        write_atomic(str(path), "a,b\n")
        assert path.read_text(encoding="utf-8") == "a,b\n"
        assert [p.name for p in tmp_path.iterdir()] == ["out.csv"]

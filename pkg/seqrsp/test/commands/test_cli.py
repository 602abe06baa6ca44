"""Class which tests the command-line interface."""
import csv
import io
import json

import pytest

from seqrsp.cli import main


def run(capsys, *argv):
    """Run the command line and return the exit code, stdout and stderr."""
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def rows(text):
    """Parse CSV output into dictionaries."""
    return list(csv.DictReader(io.StringIO(text)))


class TestClassicalBoundCommand:
    """Class which tests the classical-bound command."""

    def test_equator(self, capsys):
        """Test the bound on the equator."""
        code, out, _ = run(capsys, "classical-bound", "--theta", "1.5707963")
        assert code == 0
        assert rows(out) == [{"theta": "1.5708", "f_classical": "0.75"}]

    def test_pole(self, capsys):
        """Test the bound at the pole."""
        _, out, _ = run(capsys, "classical-bound", "--theta", "0")
        assert float(rows(out)[0]["f_classical"]) == pytest.approx(1.0)

    def test_sweep(self, capsys):
        """Test that a sweep gives one symmetric row per point."""
        code, out, _ = run(capsys, "classical-bound", "--sweep", "0:3.14159:0.7854")
        values = [float(row["f_classical"]) for row in rows(out)]
        assert code == 0
        assert len(values) == 5
        assert values == pytest.approx(values[::-1], abs=1e-5)

    def test_default_sweep(self, capsys):
        """Test the default sweep from 0 to pi in steps of 0.01."""
        _, out, _ = run(capsys, "classical-bound")
        assert len(rows(out)) == 315

    def test_malformed_sweep(self, capsys):
        """Test that a malformed range is a usage error reported on stderr."""
        code, out, err = run(capsys, "classical-bound", "--sweep", "0:1")
        assert code == 2
        assert out == ""
        assert "Could not finish command classical-bound" in err


class TestCascadeCommand:
    """Class which tests the cascade command."""

    def test_deterministic_preparation(self, capsys):
        """Test a sharp measurement on the singlet."""
        code, out, _ = run(capsys, "cascade", "--family", "singlet", "--theta", "1.5708", "--lambdas", "1")
        document = json.loads(out)
        assert code == 0
        assert document["schema"] == 1
        assert document["rows"][0]["f_av"] == pytest.approx(1.0)
        assert document["rows"][0]["beats_classical"] is True

    def test_werner(self, capsys):
        """Test the first Bob's fidelity for a Werner state."""
        _, out, _ = run(capsys, "cascade", "--family", "werner:0.7", "--lambdas", "1")
        assert json.loads(out)["rows"][0]["f_av"] == pytest.approx(0.85)

    def test_nonmax_quarter_is_singlet(self, capsys):
        """Test that xi = pi/4 reproduces the singlet's values."""
        _, nonmax, _ = run(capsys, "cascade", "--family", "nonmax:0.785398163", "--lambdas", "0.6,1")
        _, singlet, _ = run(capsys, "cascade", "--family", "singlet", "--lambdas", "0.6,1")
        first = [row["f_av"] for row in json.loads(nonmax)["rows"]]
        second = [row["f_av"] for row in json.loads(singlet)["rows"]]
        assert first == pytest.approx(second, abs=1e-8)

    def test_out_of_range(self, capsys):
        """Test that an out-of-range sharpness names its index."""
        code, out, err = run(capsys, "cascade", "--lambdas", "0.5,1.5")
        assert code == 2
        assert out == ""
        assert "index 1" in err

    def test_csv(self, capsys):
        """Test the CSV rendering of a cascade."""
        _, out, _ = run(capsys, "cascade", "--lambdas", "0.6,1", "--format", "csv")
        assert [row["f_av"] for row in rows(out)] == ["0.8", "0.95"]

    def test_csv_coefficients(self, capsys):
        """Test that the CSV rendering carries the correlation coefficients of each shared state."""
        _, out, _ = run(capsys, "cascade", "--lambdas", "0.6,1", "--format", "csv")
        second = rows(out)[1]
        assert [float(second[key]) for key in ("c1", "c2", "c3")] == pytest.approx([-0.9, -0.9, -0.8])
        assert float(rows(out)[0]["linear_entropy"]) == pytest.approx(0.0, abs=1e-6)


class TestTableCommand:
    """Class which tests the table command."""

    def test_table_one(self, capsys):
        """Test the minimum sharpness table on the equator."""
        code, out, _ = run(capsys, "table", "--which", "I")
        table = rows(out)
        assert code == 0
        assert len(table) == 6
        assert table[-1]["range"] == "(0.859, 1]"

    def test_table_b(self, capsys):
        """Test the minimum sharpness table on theta = arctan(sqrt 2)."""
        _, out, _ = run(capsys, "table", "--which", "B", "--compare")
        table = rows(out)
        assert [float(row["lambda_min"]) for row in table] == pytest.approx([0.605, 0.701, 0.866], abs=1e-3)
        assert all(abs(float(row["deviation"])) < 1e-3 for row in table)

    def test_table_four(self, capsys):
        """Test that no Bob beats the bound for Werner parameters up to 1/2."""
        _, out, _ = run(capsys, "table", "--which", "IV", "--compare")
        first = rows(out)[0]
        assert first["n"] == "0"
        assert first["intervals"] == first["published"] == "[0.000, 0.500]"

    def test_unknown_selector(self, capsys):
        """Test that an unknown table is a usage error."""
        code, _, _ = run(capsys, "table", "--which", "V")
        assert code == 2


class TestResourcesCommand:
    """Class which tests the resources command."""

    def test_seven_bobs(self, capsys):
        """Test that the seventh Bob's measurement leaves discord but no concurrence."""
        code, out, _ = run(capsys, "resources", "--max-bob", "7")
        table = rows(out)
        assert code == 0
        assert len(table) == 7
        assert float(table[0]["max_discord"]) == pytest.approx(1.0)
        assert float(table[1]["max_discord"]) == pytest.approx(0.8103, abs=1e-4)
        assert float(table[0]["discord_after"]) == pytest.approx(0.8103, abs=1e-4)
        assert float(table[-1]["max_concurrence"]) > 0.0
        assert float(table[-1]["concurrence_after"]) == 0.0
        assert float(table[-1]["discord_after"]) > 0.01

    def test_out_of_range(self, capsys):
        """Test that more than eight Bobs are rejected."""
        code, _, _ = run(capsys, "resources", "--max-bob", "9")
        assert code == 2


class TestMonteCarloCommand:
    """Class which tests the montecarlo command."""

    def test_seeded_run(self, capsys):
        """Test that a seeded run is echoed and reproducible."""
        argv = ("montecarlo", "--lambdas", "0.6,1", "--trials", "2000", "--seed", "42")
        _, first, _ = run(capsys, *argv)
        _, second, _ = run(capsys, *argv)
        document = json.loads(first)
        assert first == second
        assert document["seed"] == 42
        assert len(document["rows"]) == 2
        assert document["parameters"]["max_abs_z"] < 4

    def test_seed_generated(self, capsys):
        """Test that a missing seed is drawn and echoed."""
        _, out, _ = run(capsys, "montecarlo", "--lambdas", "1", "--trials", "1000")
        assert isinstance(json.loads(out)["seed"], int)

    def test_missing_lambdas(self, capsys):
        """Test that a single configuration needs a chain."""
        code, _, _ = run(capsys, "montecarlo", "--trials", "1000")
        assert code == 2

    def test_too_few_trials(self, capsys):
        """Test that fewer than 1000 trials are rejected."""
        code, _, _ = run(capsys, "montecarlo", "--lambdas", "1", "--trials", "10", "--seed", "1")
        assert code == 2


class TestOutput:
    """Class which tests the shared output options."""

    def test_out_file(self, capsys, tmp_path):
        """Test that --out writes the file and leaves stdout empty."""
        path = tmp_path / "bound.json"
        code, out, _ = run(capsys, "classical-bound", "--theta", "0", "--format", "json", "--out", str(path))
        assert code == 0
        assert out == ""
        assert json.loads(path.read_text(encoding="utf-8"))["command"] == "classical-bound"

    def test_out_missing_directory(self, capsys, tmp_path):
        """Test that --out into a missing directory fails with a one-line message."""
        path = tmp_path / "missing" / "bound.csv"
        code, out, err = run(capsys, "classical-bound", "--theta", "0", "--out", str(path))
        assert code == 1
        assert out == ""
        assert "Could not finish command classical-bound: No such file or directory" in err
        assert "Traceback" not in err
        assert not path.parent.exists()

    def test_degrees(self, capsys):
        """Test that --deg reads angles in degrees."""
        _, out, _ = run(capsys, "classical-bound", "--theta", "90", "--deg")
        assert float(rows(out)[0]["f_classical"]) == pytest.approx(0.75)

    def test_unknown_command(self, capsys):
        """Test that an unknown command is a usage error."""
        code, _, _ = run(capsys, "plot")
        assert code == 2


class TestSweepCommand:
    """Class which tests the sweep command."""

    def test_theta_axis(self, capsys):
        """Test that the poles admit no Bob and the equator six."""
        code, out, _ = run(capsys, "sweep", "--axis", "theta", "--points", "3")
        table = rows(out)
        assert code == 0
        assert [row["n"] for row in table] == ["0", "6", "0"]
        assert float(table[1]["lambda_1"]) == pytest.approx(0.5)
        assert float(table[1]["lambda_6"]) == pytest.approx(0.859, abs=1e-3)
        assert float(table[0]["lambda_1"]) == pytest.approx(1.0)
        assert table[0]["lambda_2"] == ""

    def test_xi_axis(self, capsys):
        """Test the product states at both ends of the xi axis."""
        _, out, _ = run(capsys, "sweep", "--axis", "xi", "--points", "3", "--max-bob", "7")
        table = rows(out)
        assert [row["n"] for row in table] == ["0", "6", "0"]
        assert float(table[1]["lambda_7"]) > 1.0

    def test_werner_axis(self, capsys):
        """Test the Werner axis in JSON, where a requirement that cannot be met is null."""
        code, out, _ = run(capsys, "sweep", "--axis", "werner_c", "--points", "3", "--format", "json")
        document = json.loads(out)
        assert code == 0
        assert [row["werner_c"] for row in document["rows"]] == [0.0, 0.5, 1.0]
        assert [row["n"] for row in document["rows"]] == [0, 0, 6]
        assert document["rows"][0]["lambda_1"] is None
        assert [row["linear_entropy"] for row in document["rows"]] == pytest.approx([1.0, 0.75, 0.0], abs=1e-12)
        assert document["rows"][2]["lambda_1"] == pytest.approx(0.5)

    def test_too_few_points(self, capsys):
        """Test that a sweep needs two points."""
        code, _, _ = run(capsys, "sweep", "--axis", "theta", "--points", "1")
        assert code == 2

    def test_unknown_axis(self, capsys):
        """Test that an unknown axis is a usage error."""
        code, _, _ = run(capsys, "sweep", "--axis", "phi")
        assert code == 2

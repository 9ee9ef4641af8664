"""Test suite for CLI commands.

This module tests all CLI commands including:
- tmatrix single-point report
- scan / curves / lossless table output
- compose on the shipped sample sequences
- units conversion
- exit codes and angle parsing
"""

import csv
import io
import json
import math

import click
import pytest
from click.testing import CliRunner

from src import __version__
from src.analysis.scan import scan_grid
from src.cli import cli, run
from src.cli.params import ANGLE
from src.cli.tables import SCAN_COLUMNS, emit_table
from src.core.exceptions import InvalidParameterError
from src.gates.algebra import compose, z_recipe


@pytest.fixture
def runner():
    """Create Click CLI test runner."""
    return CliRunner()


SMALL_SCAN = ["--ka-min", "19.5", "--ka-max", "20.5", "--x-min", "0", "--x-max", "1", "--n-ka", "5", "--n-x", "3"]


class TestAngleType:
    """Test the angle parameter type."""

    @pytest.mark.parametrize("text,expected", [
        ("pi", math.pi),
        ("0.5pi", 0.5 * math.pi),
        ("-pi", -math.pi),
        ("2*pi", 2 * math.pi),
        (".25 pi", 0.25 * math.pi),
        ("1.25", 1.25),
        ("1e-3", 1e-3),
    ])
    def test_convert(self, text, expected):
        """Test radians and pi literals are parsed."""
        assert ANGLE.convert(text, None, None) == pytest.approx(expected)

    @pytest.mark.parametrize("text", ["abc", "pie", "inf", "nan"])
    def test_reject(self, text):
        """Test non-angles are rejected."""
        with pytest.raises(click.BadParameter):
            ANGLE.convert(text, None, None)


class TestGroup:
    """Test the command group."""

    def test_help_lists_commands(self, runner):
        """Test every command is registered."""
        result = runner.invoke(cli, ["--help"])
        assert result.exit_code == 0
        for name in ("tmatrix", "scan", "curves", "lossless", "compose", "units"):
            assert name in result.output

    def test_version(self, runner):
        """Test --version prints the package version."""
        result = runner.invoke(cli, ["--version"])
        assert result.exit_code == 0
        assert __version__ in result.output


class TestExitCodes:
    """Test exit codes returned by run()."""

    def test_success(self):
        """Test a valid command exits with 0."""
        assert run(["units", "--radius", "0.25e-6", "--mass-ratio", "0.023", "--energy", "11.13e-3"]) == 0

    def test_missing_argument(self):
        """Test a missing required option exits with 2."""
        assert run(["tmatrix"]) == 2

    def test_invalid_value(self):
        """Test an out-of-range value exits with 2."""
        assert run(["tmatrix", "--ka", "-1"]) == 2

    def test_degenerate_point(self, capsys):
        """Test a resonance pole exits with 3."""
        assert run(["tmatrix", "--ka", "20", "--x", "0", "--gamma", "pi"]) == 3
        assert "Degenerate" in capsys.readouterr().err

    def test_verbose_flag(self):
        """Test --verbose is accepted before a command."""
        assert run(["-v", "units", "--radius", "0.25e-6", "--mass-ratio", "0.023", "--ka", "20.4"]) == 0


class TestTmatrixCommand:
    """Test the tmatrix command."""

    def test_diametric_report(self, runner):
        """Test delta = pi is reported for a diametric ring."""
        result = runner.invoke(cli, ["tmatrix", "--ka", "20.4", "--x", "1.0", "--gamma", "pi"])
        assert result.exit_code == 0
        assert "[closed form]" in result.output
        assert "[oracle]" in result.output
        delta_line = next(line for line in result.output.splitlines() if line.startswith("delta ="))
        assert "(1.000000000 pi)" in delta_line
        assert "Rotation" in result.output

    def test_engines_agree(self, runner):
        """Test the comparison section shows unit fidelity."""
        result = runner.invoke(cli, ["tmatrix", "--ka", "20.4", "--x", "1.0", "--gamma", "0.5pi"])
        assert result.exit_code == 0
        line = next(line for line in result.output.splitlines() if line.startswith("fidelity ="))
        assert float(line.split("=")[1]) == pytest.approx(1.0, abs=1e-8)

    def test_degenerate_point_exit_code(self, runner):
        """Test a degenerate point exits with 3 under CliRunner too."""
        result = runner.invoke(cli, ["tmatrix", "--ka", "20", "--gamma", "pi"])
        assert result.exit_code == 3


class TestScanCommand:
    """Test the scan command."""

    def test_csv_to_file(self, runner, tmp_path):
        """Test CSV output has one row per cell and re-parses exactly."""
        out = tmp_path / "scan.csv"
        result = runner.invoke(cli, ["scan", *SMALL_SCAN, "-o", str(out)])
        assert result.exit_code == 0

        rows = list(csv.DictReader(io.StringIO(out.read_text())))
        assert list(rows[0].keys()) == SCAN_COLUMNS
        assert len(rows) == 15

        grid = scan_grid(math.pi, ka_range=(19.5, 20.5), x_range=(0.0, 1.0), resolution=(5, 3))
        assert float(rows[1]["t_mag"]) == grid.t_mag[1, 0]
        assert float(rows[5]["x"]) == grid.x_axis[1]

    def test_deterministic(self, runner, tmp_path):
        """Test identical runs give identical bytes."""
        paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
        for path in paths:
            assert runner.invoke(cli, ["scan", *SMALL_SCAN, "--workers", "2", "-o", str(path)]).exit_code == 0
        assert paths[0].read_bytes() == paths[1].read_bytes()

    def test_degenerate_flag_column(self, runner, tmp_path):
        """Test the (ka=20, x=0) pole is written with flag 1."""
        out = tmp_path / "scan.csv"
        result = runner.invoke(cli, ["scan", *SMALL_SCAN, "-o", str(out)])
        assert result.exit_code == 0
        rows = list(csv.DictReader(io.StringIO(out.read_text())))
        pole = next(r for r in rows if float(r["ka"]) == 20.0 and float(r["x"]) == 0.0)
        assert pole["flag"] == "1"
        assert pole["t_mag"] == "nan"

    def test_json_envelope(self, runner, tmp_path):
        """Test JSON output uses the schema envelope with null for degenerate cells."""
        out = tmp_path / "scan.json"
        result = runner.invoke(cli, ["scan", *SMALL_SCAN, "--format", "json", "-o", str(out)])
        assert result.exit_code == 0
        document = json.loads(out.read_text())
        assert document["schema_version"] == 1
        assert document["params"]["gamma"] == pytest.approx(math.pi)
        assert len(document["rows"]) == 15
        assert any(r["t_mag"] is None for r in document["rows"])

    def test_invalid_window(self, runner):
        """Test an inverted window is a usage error."""
        result = runner.invoke(cli, ["scan", "--ka-min", "22", "--ka-max", "19", "--n-ka", "5", "--n-x", "3"])
        assert result.exit_code == 2


class TestCurvesCommand:
    """Test the curves and lossless commands."""

    def test_curves_json(self, runner, tmp_path):
        """Test phase-gate curves are written with |delta| < 1e-8."""
        out = tmp_path / "curves.json"
        result = runner.invoke(cli, [
            "curves", "--gamma", "0.5pi", "--ka-min", "20", "--ka-max", "21",
            "--x-min", "1.0", "--x-max", "1.5", "--n-ka", "101", "--n-x", "26",
            "--format", "json", "-o", str(out),
        ])
        assert result.exit_code == 0
        rows = json.loads(out.read_text())["rows"]
        assert rows
        assert all(abs(r["delta"]) < 1e-8 for r in rows)

    def test_curves_reject_diametric(self, runner):
        """Test gamma = pi is a usage error for curves."""
        result = runner.invoke(cli, ["curves", "--gamma", "pi"])
        assert result.exit_code == 2

    def test_lossless_diametric(self, runner, tmp_path):
        """Test the diametric lossless search at x = 1 finds points."""
        out = tmp_path / "lossless.csv"
        result = runner.invoke(cli, ["lossless", "--gamma", "pi", "--x", "1.0", "-o", str(out)])
        assert result.exit_code == 0
        rows = list(csv.DictReader(io.StringIO(out.read_text())))
        assert rows
        assert all(1 - float(r["t_mag"]) < 1e-6 for r in rows)

    @pytest.mark.parametrize("gamma,n_ka,expected", [
        ("0.5pi", None, 601),
        ("0.5pi", "3001", 3001),
        ("pi", None, 3001),
        ("pi", "601", 601),
    ])
    def test_lossless_resolution_per_mode(self, runner, monkeypatch, gamma, n_ka, expected):
        """Test --n-ka defaults per search mode and an explicit value is always kept."""
        seen = {}

        def fake_curves(gamma, ka_range, x_range, resolution):
            seen["n_ka"] = resolution[0]
            return []

        def fake_diametric(x, ka_range, resolution):
            seen["n_ka"] = resolution
            return []

        monkeypatch.setattr("src.cli.explore.delta_zero_curves", fake_curves)
        monkeypatch.setattr("src.cli.explore.lossless_points_diametric", fake_diametric)
        args = ["lossless", "--gamma", gamma] + (["--n-ka", n_ka] if n_ka else [])
        result = runner.invoke(cli, args)
        assert result.exit_code == 0
        assert seen["n_ka"] == expected


class TestComposeCommand:
    """Test the compose command."""

    def test_z_sample(self, runner, sequences_dir):
        """Test two quarter phase gates give Z."""
        result = runner.invoke(cli, ["compose", "--file", str(sequences_dir / "z_from_two_quarter_phase.json")])
        assert result.exit_code == 0
        assert "fidelity Z = 1.000000" in result.output

    def test_hadamard_sample(self, runner, sequences_dir):
        """Test the rotation-then-Z sample gives H."""
        result = runner.invoke(cli, ["compose", "--file", str(sequences_dir / "hadamard_from_rotation_and_z.json")])
        assert result.exit_code == 0
        assert "fidelity H = 1.000000" in result.output

    def test_ideal_ring(self, runner, sequences_dir, tmp_path):
        """Test --ideal keeps only the unitary part and writes JSON."""
        out = tmp_path / "seq.json"
        result = runner.invoke(cli, [
            "compose", "--file", str(sequences_dir / "diametric_ring_x1.json"), "--ideal", "-o", str(out),
        ])
        assert result.exit_code == 0
        document = json.loads(out.read_text())
        assert document["total_efficiency"] == 1.0
        assert document["params"]["unitary_only"] is True

    def test_ideal_nested_sequence(self, runner, tmp_path):
        """Test --ideal applies inside nested sequences."""
        path = tmp_path / "nested.json"
        ring = {"kind": "ring", "ka": 20.4, "x": 1.0, "gamma": 1.0}
        path.write_text(json.dumps({"rows": [{"kind": "sequence", "rows": [ring]}]}))
        out = tmp_path / "seq.json"
        result = runner.invoke(cli, ["compose", "--file", str(path), "--ideal", "-o", str(out)])
        assert result.exit_code == 0
        assert json.loads(out.read_text())["total_efficiency"] == 1.0

    def test_oracle_method(self, runner, sequences_dir):
        """Test the oracle engine can be selected."""
        result = runner.invoke(cli, [
            "compose", "--file", str(sequences_dir / "diametric_ring_x1.json"), "--method", "oracle",
        ])
        assert result.exit_code == 0
        assert "total_efficiency" in result.output

    def test_invalid_json(self, runner, tmp_path):
        """Test a broken document is a usage error."""
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        result = runner.invoke(cli, ["compose", "--file", str(path)])
        assert result.exit_code == 2

    def test_missing_file(self, runner, tmp_path):
        """Test a missing file is rejected by click."""
        result = runner.invoke(cli, ["compose", "--file", str(tmp_path / "none.json")])
        assert result.exit_code == 2


class TestUnitsCommand:
    """Test the units command."""

    def test_forward(self, runner):
        """Test 0.25 um, 0.023, 11.13 meV gives ka ~ 20.49."""
        result = runner.invoke(cli, ["units", "--radius", "0.25e-6", "--mass-ratio", "0.023", "--energy", "11.13e-3"])
        assert result.exit_code == 0
        line = next(line for line in result.output.splitlines() if line.startswith("ka ="))
        assert float(line.split("=")[1]) == pytest.approx(20.49, abs=0.01)

    def test_alpha_for_theta(self, runner):
        """Test --theta prints the Rashba coefficient."""
        result = runner.invoke(cli, ["units", "--radius", "0.25e-6", "--mass-ratio", "0.023", "--theta=-0.25pi"])
        assert result.exit_code == 0
        assert "alpha_eVm" in result.output

    def test_energy_for_ka(self, runner):
        """Test --ka prints the carrier energy."""
        result = runner.invoke(cli, ["units", "--radius", "0.25e-6", "--mass-ratio", "0.023", "--ka", "20.4"])
        assert result.exit_code == 0
        line = next(line for line in result.output.splitlines() if line.startswith("energy_eV ="))
        assert float(line.split("=")[1]) == pytest.approx(11.13e-3, rel=0.02)

    def test_needs_a_mode(self, runner):
        """Test a run without --energy, --theta or --ka is a usage error."""
        result = runner.invoke(cli, ["units", "--radius", "0.25e-6", "--mass-ratio", "0.023"])
        assert result.exit_code == 2


class TestEmitTable:
    """Test the table writers directly."""

    def test_sequence_json(self):
        """Test a GateSequence serializes with matrix, efficiency and fidelities."""
        document = json.loads(emit_table(compose(z_recipe()), "json", {"source": "test"}))
        for key in ("rows", "composed", "total_efficiency", "fidelities"):
            assert key in document
        assert document["params"]["source"] == "test"

    def test_sequence_csv(self):
        """Test a GateSequence as CSV lists the four matrix entries."""
        text = emit_table(compose(z_recipe()), "csv").decode()
        assert text.splitlines()[0] == "row,col,value_re,value_im"
        assert len(text.splitlines()) == 5

    def test_points_need_gamma(self):
        """Test point tables require the junction angle."""
        with pytest.raises(InvalidParameterError):
            emit_table([], "csv", kind="points")

    def test_unknown_format(self):
        """Test unsupported formats are rejected."""
        with pytest.raises(InvalidParameterError):
            emit_table(compose(z_recipe()), "xml")

    def test_unsupported_data(self):
        """Test unsupported objects are rejected."""
        with pytest.raises(InvalidParameterError):
            emit_table({"a": 1}, "csv")

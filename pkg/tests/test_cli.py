import json
import math
from pathlib import Path

import numpy as np
import pytest
from click.testing import CliRunner

from boostosc.cli import RunConfig, cli, default_quad_order, run


@pytest.fixture
def runner():
    return CliRunner()


def read_csv(path):
    lines = Path(path).read_text().splitlines()
    header = lines[0].split(",")
    rows = [line.split(",") for line in lines[1:]]
    return header, rows


class TestSubcommands:
    def test_basis(self, runner, tmp_path):
        out = tmp_path / "basis.csv"
        result = runner.invoke(cli, ["basis", "--n", "2", "--grid", "-2:2:5", "-o", str(out)])
        assert result.exit_code == 0
        header, rows = read_csv(out)
        assert header == ["x", "chi_0", "chi_1", "chi_2"]
        assert len(rows) == 5
        center = rows[2]
        assert float(center[1]) == pytest.approx(math.pi ** -0.25, rel=1e-15)
        assert float(center[2]) == 0.0
        assert (tmp_path / "basis.csv.meta.json").exists()

    def test_boost_table(self, runner, tmp_path):
        out = tmp_path / "bt.csv"
        result = runner.invoke(
            cli,
            ["boost-table", "--n", "1", "--eta", "0.5", "--grid", "-2:2:9", "-o", str(out)],
        )
        assert result.exit_code == 0
        header, rows = read_csv(out)
        assert header == ["z", "t", "psi_direct", "psi_series"]
        assert len(rows) == 81
        for row in rows[::10]:
            assert float(row[2]) == pytest.approx(float(row[3]), abs=1e-6)
        meta = json.loads((tmp_path / "bt.csv.meta.json").read_text())
        assert meta["truncation_tails"]["series_tail"] < 1e-10

    def test_decompose(self, runner, tmp_path):
        out = tmp_path / "dec.csv"
        result = runner.invoke(
            cli, ["decompose", "--n", "0", "--eta", "0.5", "--kmax", "4", "-o", str(out)]
        )
        assert result.exit_code == 0
        header, rows = read_csv(out)
        assert header == ["n_a", "n_b", "amplitude"]
        assert len(rows) == 25
        diag = {int(r[0]): float(r[2]) for r in rows if r[0] == r[1]}
        assert diag[1] == pytest.approx(math.tanh(0.5) / math.cosh(0.5), abs=1e-9)

    def test_overlap_table(self, runner, tmp_path):
        out = tmp_path / "ov.csv"
        result = runner.invoke(
            cli, ["overlap-table", "--n", "0..3", "--eta", "1", "-o", str(out)]
        )
        assert result.exit_code == 0
        header, rows = read_csv(out)
        assert header == ["n", "eta", "overlap_numeric", "contraction_closed"]
        for i, row in enumerate(rows):
            expect = (1.0 / math.cosh(1.0)) ** (i + 1)
            assert float(row[2]) == pytest.approx(expect, abs=1e-7)
            assert float(row[3]) == pytest.approx(expect, rel=1e-14)

    def test_entropy_curve_beta_grid(self, runner, tmp_path):
        out = tmp_path / "s.csv"
        result = runner.invoke(
            cli, ["entropy-curve", "--n", "0", "--beta-grid", "0:0.95:20", "-o", str(out)]
        )
        assert result.exit_code == 0
        header, rows = read_csv(out)
        assert header == ["beta", "eta", "entropy", "purity"]
        assert len(rows) == 20
        assert float(rows[0][2]) == 0.0
        assert float(rows[0][3]) == 1.0

    def test_wigner_grid_peak(self, runner, tmp_path):
        out = tmp_path / "w.csv"
        result = runner.invoke(
            cli, ["wigner-grid", "--eta", "0", "--grid", "-3:3:61", "-o", str(out)]
        )
        assert result.exit_code == 0
        _, rows = read_csv(out)
        peak = max(float(r[2]) for r in rows)
        assert peak == pytest.approx(1.0 / math.pi, rel=1e-14)

    def test_parton(self, runner, tmp_path):
        out = tmp_path / "p.csv"
        result = runner.invoke(cli, ["parton", "--beta", "0.6", "-o", str(out)])
        assert result.exit_code == 0
        header, rows = read_csv(out)
        assert header == ["z", "density"]
        eta = math.atanh(0.6)
        peak = max(float(r[1]) for r in rows)
        assert peak == pytest.approx(
            1.0 / math.sqrt(math.pi * math.cosh(2 * eta)), rel=1e-12
        )

    def test_formfactor_curve(self, runner, tmp_path):
        out = tmp_path / "ff.csv"
        result = runner.invoke(
            cli, ["formfactor-curve", "--p-grid", "0:2:5", "-o", str(out)]
        )
        assert result.exit_code == 0
        header, rows = read_csv(out)
        assert header == ["p", "eta", "F_closed", "F_numeric", "F_static", "F_dipole"]
        first = rows[0]
        assert float(first[2]) == 1.0
        assert float(first[3]) == pytest.approx(1.0, abs=1e-9)
        for row in rows:
            assert float(row[2]) == pytest.approx(float(row[3]), abs=1e-7)
            assert float(row[5]) == pytest.approx(float(row[2]) ** 2, rel=1e-12)
        meta = json.loads((tmp_path / "ff.csv.meta.json").read_text())
        assert meta["notes"]["F_dipole"] == "illustrative"

    def test_two_mode(self, runner, tmp_path):
        out = tmp_path / "tm.csv"
        result = runner.invoke(
            cli, ["two-mode", "--n", "0", "--eta", "1", "-o", str(out)]
        )
        assert result.exit_code == 0
        header, rows = read_csv(out)
        assert header == ["k", "amplitude", "probability"]
        assert float(rows[1][1]) / float(rows[0][1]) == pytest.approx(
            math.tanh(1.0), rel=1e-12
        )
        meta = json.loads((tmp_path / "tm.csv.meta.json").read_text())
        assert meta["truncation_tails"]["entanglement_entropy"] == pytest.approx(
            1.619822092897702, abs=1e-6
        )


class TestOutputControls:
    def test_json_format(self, runner, tmp_path):
        out = tmp_path / "basis.json"
        result = runner.invoke(
            cli,
            ["basis", "--n", "1", "--grid", "0:1:3", "-o", str(out), "--format", "json"],
        )
        assert result.exit_code == 0
        data = json.loads(out.read_text())
        assert data["columns"] == ["x", "chi_0", "chi_1"]
        assert len(data["rows"]) == 3

    def test_plot_writes_figure(self, runner, tmp_path):
        out = tmp_path / "s.csv"
        result = runner.invoke(
            cli,
            ["entropy-curve", "--eta-grid", "0:1:5", "-o", str(out), "--plot"],
        )
        assert result.exit_code == 0
        png = tmp_path / "s.png"
        assert png.exists()
        assert png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"

    def test_quad_order_env_override(self, runner, tmp_path, monkeypatch):
        monkeypatch.setenv("OSC_QUAD_ORDER", "64")
        assert default_quad_order() == 64
        out = tmp_path / "ov.csv"
        result = runner.invoke(
            cli, ["overlap-table", "--n", "0", "--eta", "0.5", "-o", str(out)]
        )
        assert result.exit_code == 0
        meta = json.loads((tmp_path / "ov.csv.meta.json").read_text())
        assert meta["quad_order"] == 64

    def test_run_config_directly(self, tmp_path):
        cfg = RunConfig("parton", eta=0.5, grid=(-4.0, 4.0, 9), output=str(tmp_path / "p.csv"))
        assert run(cfg) == 0
        header, rows = read_csv(tmp_path / "p.csv")
        assert len(rows) == 9


class TestExitCodes:
    def test_eta_beta_conflict_is_usage_error(self, runner, tmp_path):
        result = runner.invoke(
            cli,
            ["parton", "--eta", "1", "--beta", "0.5", "-o", str(tmp_path / "x.csv")],
        )
        assert result.exit_code == 2

    def test_malformed_grid_is_usage_error(self, runner, tmp_path):
        result = runner.invoke(
            cli, ["parton", "--grid", "0:1", "-o", str(tmp_path / "x.csv")]
        )
        assert result.exit_code == 2

    def test_single_step_grid_is_usage_error(self, runner, tmp_path):
        result = runner.invoke(
            cli, ["basis", "--grid", "0:1:1", "-o", str(tmp_path / "x.csv")]
        )
        assert result.exit_code == 2

    def test_numerical_failure_exits_one(self, runner, tmp_path):
        # eta = 3.5 pushes the series past the mode ceiling: TruncationError
        result = runner.invoke(
            cli,
            ["boost-table", "--eta", "3.5", "--grid", "-1:1:3", "-o", str(tmp_path / "x.csv")],
        )
        assert result.exit_code == 1
        assert "mode ceiling" in result.output

    def test_luminal_beta_exits_one(self, runner, tmp_path):
        result = runner.invoke(
            cli, ["parton", "--beta", "1.0", "-o", str(tmp_path / "x.csv")]
        )
        assert result.exit_code == 1


class TestDeterminism:
    def test_repeat_runs_are_byte_identical(self, runner, tmp_path):
        args = ["two-mode", "--n", "1", "--eta", "0.8", "--tol", "1e-10"]
        outs = []
        for tag in ("a", "b"):
            out = tmp_path / f"{tag}.csv"
            result = runner.invoke(cli, args + ["-o", str(out)])
            assert result.exit_code == 0
            outs.append(out.read_bytes())
        assert outs[0] == outs[1]

    def test_float_formatting_has_17_significant_digits(self, runner, tmp_path):
        out = tmp_path / "p.csv"
        runner.invoke(cli, ["parton", "--eta", "0.3", "--grid", "0:1:3", "-o", str(out)])
        _, rows = read_csv(out)
        mantissa = rows[0][1].split("e")[0]
        digits = mantissa.replace("-", "").replace(".", "")
        assert len(digits) == 17

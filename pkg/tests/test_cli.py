import subprocess
import sys

import pytest

from qbatt import cli, sweep

SMALL = """\
equation = redfield
statistics = boson
initial = eg
axis1 = delta:-2:2:3
T_bar = 1
dT = 0
"""


def _write(tmp_path, text, name="sweep.cfg"):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


class TestRun:
    def test_run_writes_csv(self, tmp_path, capsys):
        cfg = _write(tmp_path, SMALL + f"output = {tmp_path}/out.csv\n")
        assert cli.main(["run", "--config", cfg]) == 0
        out = capsys.readouterr().out
        assert "wrote 3 rows" in out
        body = (tmp_path / "out.csv").read_text()
        assert body.startswith("# meta: version = ")

    def test_sweep_output_is_itself_a_config(self, tmp_path):
        cfg = _write(tmp_path, SMALL + f"output = {tmp_path}/out.csv\n")
        assert cli.main(["run", "--config", cfg]) == 0
        rerun = tmp_path / "rerun.csv"
        assert cli.main(["run", "--config", str(tmp_path / "out.csv"),
                         "--out", str(rerun)]) == 0
        assert rerun.read_bytes() == (tmp_path / "out.csv").read_bytes()

    def test_out_flag_overrides_config(self, tmp_path):
        cfg = _write(tmp_path, SMALL + f"output = {tmp_path}/a.csv\n")
        dest = tmp_path / "b.csv"
        assert cli.main(["run", "--config", cfg, "--out", str(dest)]) == 0
        assert dest.exists()
        assert not (tmp_path / "a.csv").exists()

    def test_missing_output_is_config_error(self, tmp_path, capsys):
        cfg = _write(tmp_path, SMALL)
        assert cli.main(["run", "--config", cfg]) == 2
        assert "output" in capsys.readouterr().err

    def test_missing_file(self, tmp_path, capsys):
        assert cli.main(["run", "--config", str(tmp_path / "nope")]) == 2
        assert "cannot read" in capsys.readouterr().err

    def test_bad_config_key(self, tmp_path, capsys):
        cfg = _write(tmp_path, SMALL + "wibble = 3\n")
        assert cli.main(["run", "--config", cfg, "--out",
                         str(tmp_path / "x.csv")]) == 2
        assert "wibble" in capsys.readouterr().err

    def test_flagged_points_exit_3(self, tmp_path, capsys):
        # F=0 collapses the dressed splitting, so that point fails
        text = SMALL.replace("axis1 = delta:-2:2:3", "axis1 = F:0:0.5:2")
        cfg = _write(tmp_path, text)
        code = cli.main(["run", "--config", cfg, "--out",
                         str(tmp_path / "f.csv")])
        assert code == 3
        captured = capsys.readouterr()
        assert "failed" in captured.err and "F=0" in captured.err
        assert "1 flagged" in captured.out
        assert (tmp_path / "f.csv").exists()


class TestPreset:
    def test_unknown_preset(self, capsys):
        assert cli.main(["preset", "fig99"]) == 2
        assert "fig99" in capsys.readouterr().err

    def test_bad_panel(self, capsys):
        assert cli.main(["preset", "fig9", "--panel", "warm"]) == 2

    def test_fig2a_end_to_end(self, tmp_path, capsys):
        dest = tmp_path / "fig2a.csv"
        code = cli.main(["preset", "fig2a", "--out", str(dest),
                         "--threads", "4"])
        assert code == 0
        lines = dest.read_text().splitlines()
        data = [l for l in lines if not l.startswith("#")]
        assert len(data) == 1 + 121
        # resonant midpoint is bistable, edges are not
        mid = data[1 + 60].split(",")
        edge = data[1].split(",")
        assert mid[0] == "0" and mid[2] == "1"
        assert edge[0] == "-3" and edge[2] == "0"

    def test_tau_and_gap_tol_flags(self, tmp_path):
        dest = tmp_path / "t.csv"
        code = cli.main(["preset", "fig2a", "--out", str(dest),
                         "--threads", "4", "--tau", "5",
                         "--gap-tol", "1e-6"])
        assert code == 0
        body = dest.read_text()
        assert "# meta: tau = 5.0" in body
        assert "# meta: gap_tol = 1e-06" in body


class TestListPresets:
    def test_lists_all(self, capsys):
        assert cli.main(["list-presets"]) == 0
        out = capsys.readouterr().out
        for name in sweep.PRESET_NAMES:
            assert name in out
        assert "panels:" in out


class TestPoint:
    def test_dump(self, tmp_path, capsys):
        cfg = _write(tmp_path, SMALL)
        assert cli.main(["point", "--config", cfg, "--at", "delta=0"]) == 0
        out = capsys.readouterr().out
        assert "bistable = yes" in out
        assert "generator spectrum" in out
        assert out.count("j") >= 16
        eff = [l for l in out.splitlines()
               if l.startswith("efficiency = ")][0]
        assert float(eff.split("=")[1]) < 0.02

    def test_override_extends_fixed(self, tmp_path, capsys):
        cfg = _write(tmp_path, SMALL)
        assert cli.main(["point", "--config", cfg,
                         "--at", "delta=0,dT=0.5"]) == 0
        first = capsys.readouterr().out
        assert "T1=1.25" in first and "T2=0.75" in first

    def test_missing_axis_value(self, tmp_path, capsys):
        cfg = _write(tmp_path, SMALL)
        assert cli.main(["point", "--config", cfg, "--at", "dT=1"]) == 2
        assert "delta" in capsys.readouterr().err

    def test_unknown_override(self, tmp_path, capsys):
        cfg = _write(tmp_path, SMALL)
        assert cli.main(["point", "--config", cfg,
                         "--at", "delta=0,zork=1"]) == 2
        assert "zork" in capsys.readouterr().err

    def test_numeric_failure_exit_3(self, tmp_path, capsys):
        cfg = _write(tmp_path, SMALL)
        assert cli.main(["point", "--config", cfg,
                         "--at", "delta=0,F=0"]) == 3
        assert "numeric error" in capsys.readouterr().err


class TestEntryPoint:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "qbatt.cli", "list-presets"],
            capture_output=True, text=True, timeout=120)
        assert proc.returncode == 0
        assert "fig11" in proc.stdout

    def test_usage_error_exit_2(self):
        proc = subprocess.run(
            [sys.executable, "-m", "qbatt.cli", "frob"],
            capture_output=True, text=True, timeout=120)
        assert proc.returncode == 2

    def test_version(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["--version"])
        assert exc.value.code == 0

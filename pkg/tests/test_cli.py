import json
import math
import subprocess
import sys

import pytest

from bellgen.cli import main
from bellgen.core import parse, render
from bellgen.iterate import mabk, sliwa


def run_cli(args, stdin=None):
    proc = subprocess.run(
        [sys.executable, "-m", "bellgen.cli", *args],
        input=stdin, capture_output=True, text=True)
    return proc


class TestFamilies:
    def test_mabk_bound_pipeline(self):
        out = run_cli(["family", "mabk", "3"])
        assert out.returncode == 0
        bound = run_cli(["bound", "-"], stdin=out.stdout)
        assert bound.returncode == 0
        assert "bound 1" in bound.stdout

    def test_family_output_parses(self, tmp_path):
        path = tmp_path / "f.txt"
        out = run_cli(["family", "sliwa", "2", "-o", str(path)])
        assert out.returncode == 0
        assert parse(path.read_text()) == sliwa(2)

    def test_sliwa4_variant_listing(self):
        out = run_cli(["family", "sliwa4", "1", "99"])
        assert out.returncode == 2
        assert "rows" in out.stderr

    def test_bad_args(self):
        assert run_cli(["family", "mabk"]).returncode == 2
        assert run_cli(["family", "mabk", "x"]).returncode == 2


class TestBoundTight:
    def test_tight_exit_codes(self):
        facet = run_cli(["tight", "-"], stdin=render(sliwa(1)))
        assert facet.returncode == 0
        assert "facet true" in facet.stdout
        from bellgen.repro import split_counterexample

        loose = run_cli(["tight", "-"], stdin=render(split_counterexample()))
        assert loose.returncode == 1
        assert "facet false" in loose.stdout

    def test_extension_row_is_facet(self):
        out = run_cli(["family", "sliwa4", "1", "1"])
        tight = run_cli(["tight", "-"], stdin=out.stdout)
        assert tight.returncode == 0
        assert "facet true" in tight.stdout

    def test_format_error_reports_line(self):
        bad = "scenario n=2 m=2,2\n+1/2 A9\n"
        out = run_cli(["bound", "-"], stdin=bad)
        assert out.returncode == 2
        assert "line 2" in out.stderr


class TestDecomposeIterate:
    def test_pipe_identity(self):
        f = render(sliwa(3))
        pieces = run_cli(["decompose", "-"], stdin=f)
        assert pieces.returncode == 0
        rebuilt = run_cli(["iterate", "-"], stdin=pieces.stdout)
        assert rebuilt.returncode == 0
        assert parse(rebuilt.stdout) == sliwa(3)

    def test_piece_files_and_spec(self, tmp_path):
        src = tmp_path / "f.txt"
        src.write_text(render(sliwa(1)))
        out = run_cli(["decompose", str(src), "-o", str(tmp_path)])
        assert out.returncode == 0
        assert "constraints satisfied" in out.stdout
        spec = tmp_path / "spec.txt"
        spec.write_text(
            "formula=2m\n"
            f"pp={tmp_path}/piece_pp.txt\n"
            f"pm={tmp_path}/piece_pm.txt\n"
            f"mp={tmp_path}/piece_mp.txt\n")
        built = run_cli(["iterate", str(spec)])
        assert built.returncode == 0
        assert parse(built.stdout) == sliwa(1)

    def test_sym_formula(self, tmp_path):
        pp = tmp_path / "pp.txt"
        pm = tmp_path / "pm.txt"
        pp.write_text(render(mabk(2)))
        transformed = run_cli(
            ["transform", str(pp), "perm A 2 1; perm B 2 1", "-o", str(pm)])
        assert transformed.returncode == 0
        spec = tmp_path / "spec.txt"
        spec.write_text(f"formula=sym\npp={pp}\npm={pm}\n")
        built = run_cli(["iterate", str(spec)])
        assert parse(built.stdout) == mabk(3)


class TestTransform:
    def test_negation(self):
        out = run_cli(["transform", "-", "neg"], stdin=render(sliwa(1)))
        assert parse(out.stdout) == -sliwa(1)

    def test_bad_expr(self):
        out = run_cli(["transform", "-", "warp A"], stdin=render(sliwa(1)))
        assert out.returncode == 2


class TestQuantumCommands:
    def test_qmax_chsh(self):
        out = run_cli(
            ["qmax", "-", "--dim", "2", "--restarts", "8", "--seed", "0"],
            stdin=render(mabk(2)))
        assert out.returncode == 0
        value = float(out.stdout.split()[1])
        assert value == pytest.approx(math.sqrt(2), abs=1e-6)

    def test_qmax_model_dump(self, tmp_path):
        model = tmp_path / "model.txt"
        out = run_cli(
            ["qmax", "-", "--restarts", "2", "--model", str(model)],
            stdin=render(mabk(2)))
        assert out.returncode == 0
        assert model.exists()
        assert "observable party" in model.read_text()

    def test_sweep_tsv(self, tmp_path):
        out_path = tmp_path / "curve.tsv"
        out = run_cli(
            ["sweep", "-", "--grid", "9", "--restarts", "2", "--seed", "0",
             "-o", str(out_path)],
            stdin=render(mabk(2)))
        assert out.returncode == 0
        lines = out_path.read_text().splitlines()
        assert lines[0] == "theta\tvalue"
        assert len(lines) == 10
        assert "max" in out.stderr

    def test_seed_determinism(self):
        args = ["qmax", "-", "--restarts", "4", "--seed", "7"]
        first = run_cli(args, stdin=render(sliwa(4)))
        second = run_cli(args, stdin=render(sliwa(4)))
        assert first.stdout == second.stdout


class TestReproduce:
    def test_counterexample_scenario(self, tmp_path):
        out = run_cli(
            ["reproduce", "sm1_counterexample", "-o", str(tmp_path)])
        assert out.returncode == 0
        assert "PASS" in out.stdout
        report = json.loads((tmp_path / "sm1_counterexample.json").read_text())
        assert report["is_facet"] is False
        assert report["bound"] == "1"

    def test_unknown_scenario(self):
        out = run_cli(["reproduce", "nonsense"])
        assert out.returncode == 2

    def test_in_process_entry_point(self, tmp_path, capsys):
        code = main(["reproduce", "sliwa_bounds", "-o", str(tmp_path)])
        assert code == 0
        captured = capsys.readouterr()
        assert "46/46" in captured.out
        tsv = (tmp_path / "sliwa_bounds.tsv").read_text().splitlines()
        assert len(tsv) == 47

    def test_reports_byte_stable(self, tmp_path, capsys):
        for sub in ("one", "two"):
            code = main(["reproduce", "eq13", "-o", str(tmp_path / sub),
                         "--seed", "3"])
            assert code == 0
        capsys.readouterr()
        first = (tmp_path / "one" / "eq13.json").read_bytes()
        second = (tmp_path / "two" / "eq13.json").read_bytes()
        assert first == second

    def test_qmax_threads_agree(self):
        src = render(sliwa(7))
        serial = run_cli(["qmax", "-", "--restarts", "6", "--seed", "1",
                          "--threads", "1"], stdin=src)
        parallel = run_cli(["qmax", "-", "--restarts", "6", "--seed", "1",
                            "--threads", "2"], stdin=src)
        assert serial.stdout.splitlines()[0] == parallel.stdout.splitlines()[0]

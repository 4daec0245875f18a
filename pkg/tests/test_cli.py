import json
import math

import pytest

from hurwitzlab.cli import main

PI = math.pi


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestReport:
    def test_astroid_spectral(self, capsys):
        code, out, _ = run(capsys, "report", "--spec", "astroid:1,0.2", "--path", "spectral")
        assert code == 0
        data = json.loads(out)
        assert data["L"] == pytest.approx(6.2831853, rel=1e-6)
        assert data["Delta"] == pytest.approx(2.3687052, rel=1e-6)

    def test_circle(self, capsys):
        code, out, _ = run(capsys, "report", "--spec", "circle:1", "--path", "spectral")
        data = json.loads(out)
        assert code == 0
        assert data["F"] == pytest.approx(3.1415927, rel=1e-6)
        assert data["Fe"] == 0.0

    def test_both_paths(self, capsys):
        code, out, _ = run(capsys, "report", "--spec", "deltoid:1,0.1")
        data = json.loads(out)
        assert code == 0
        assert data["spectral"]["path"] == "spectral"
        assert data["quadrature"]["path"] == "quadrature"
        assert data["spectral"]["Fe"] == pytest.approx(data["quadrature"]["Fe"], rel=1e-12)

    def test_bad_body_file_exit_2(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"a0": 1.0, "harmonics": [{"n": 2, "a": 0.0, "b": 0.5}]}')
        code, _, err = run(capsys, "report", "--body", str(bad))
        assert code == 2
        assert "NotStrictlyConvex" in err

    def test_missing_source_exit_2(self, capsys):
        code, _, err = run(capsys, "report")
        assert code == 2 and "body source" in err

    def test_out_file(self, capsys, tmp_path):
        out_file = tmp_path / "report.json"
        code, _, _ = run(capsys, "report", "--spec", "circle:2", "--out", str(out_file))
        assert code == 0
        assert json.loads(out_file.read_text())["spectral"]["L"] == pytest.approx(4 * PI)


class TestVerify:
    def test_deltoid_passes_with_cw_equality(self, capsys):
        code, out, _ = run(capsys, "verify", "--spec", "deltoid:1,0.1")
        assert code == 0
        line = next(l for l in out.splitlines() if l.startswith("hurwitz_cw"))
        assert "equality" in line
        assert "overall: pass" in out

    def test_amplitude_bound_exit_2(self, capsys):
        code, _, err = run(capsys, "verify", "--spec", "astroid:1,0.4")
        assert code == 2
        assert "AmplitudeTooLarge" in err

    def test_both_paths_json_out(self, capsys, tmp_path):
        out_file = tmp_path / "suite.json"
        code, _, _ = run(
            capsys, "verify", "--body", str(_write_cw35(tmp_path)), "--path", "both",
            "--out", str(out_file),
        )
        assert code == 0
        report = json.loads(out_file.read_text())
        assert report["pass"] is True
        cw = [v for v in report["verdicts"] if v["id"] == "visual_angle_bound_cw"]
        assert {v["path"] for v in cw} == {"spectral", "geometric"}
        assert all(v["equality"] for v in cw)

    def test_unknown_spec_exit_2(self, capsys):
        code, _, err = run(capsys, "verify", "--spec", "pentagon:1")
        assert code == 2 and "unknown spec" in err


class TestRender:
    def test_hypocycloid_curve(self, capsys, tmp_path):
        out_file = tmp_path / "fig.svg"
        code, _, _ = run(capsys, "render", "--spec", "hypocycloid:5/2,1",
                         "--kind", "curve", "--out", str(out_file))
        assert code == 0
        data = out_file.read_bytes()
        assert data.startswith(b'<?xml version="1.0"')
        assert b"<polygon" in data

    def test_curve_gallery(self, capsys, tmp_path):
        out_file = tmp_path / "ast.svg"
        code, _, _ = run(capsys, "render", "--spec", "astroid:1,0.2",
                         "--kind", "boundary,evolute,pedal,parallel", "--out", str(out_file))
        assert code == 0
        assert out_file.read_bytes().count(b"<polygon") == 4

    def test_circle_evolute_marker(self, capsys, tmp_path):
        out_file = tmp_path / "dot.svg"
        code, _, _ = run(capsys, "render", "--spec", "circle:1", "--kind", "evolute",
                         "--out", str(out_file))
        assert code == 0
        assert b"<circle" in out_file.read_bytes()

    def test_bad_kind_exit_2(self, capsys):
        code, _, err = run(capsys, "render", "--spec", "circle:1", "--kind", "spline")
        assert code == 2 and "unknown kind" in err

    def test_byte_identical_runs(self, capsys, tmp_path):
        a, b = tmp_path / "a.svg", tmp_path / "b.svg"
        run(capsys, "render", "--spec", "deltoid:1,0.1", "--kind", "boundary,wigner", "--out", str(a))
        run(capsys, "render", "--spec", "deltoid:1,0.1", "--kind", "boundary,wigner", "--out", str(b))
        assert a.read_bytes() == b.read_bytes()


class TestSweep:
    def test_small_sweep_passes(self, capsys):
        code, out, _ = run(capsys, "sweep", "--count", "10", "--seed", "1")
        assert code == 0
        data = json.loads(out)
        assert data["pass"] is True
        assert data["per_theorem"]["hurwitz"]["min_residual"] >= -1e-12

    def test_zero_count_exit_2(self, capsys):
        code, _, err = run(capsys, "sweep", "--count", "0")
        assert code == 2

    def test_deterministic_output(self, capsys):
        _, out1, _ = run(capsys, "sweep", "--count", "8", "--seed", "42")
        _, out2, _ = run(capsys, "sweep", "--count", "8", "--seed", "42")
        assert out1 == out2

    def test_worker_env_override(self, capsys, monkeypatch):
        _, out1, _ = run(capsys, "sweep", "--count", "8", "--seed", "3")
        monkeypatch.setenv("HURWITZLAB_WORKERS", "4")
        _, out2, _ = run(capsys, "sweep", "--count", "8", "--seed", "3")
        assert out1 == out2  # reduction in seed order regardless of workers


def _write_cw35(tmp_path):
    path = tmp_path / "cw35.json"
    path.write_text(json.dumps({
        "a0": 1.0,
        "harmonics": [
            {"n": 3, "a": 0.05, "b": 0.0},
            {"n": 5, "a": 0.0, "b": 0.01},
        ],
    }))
    return path

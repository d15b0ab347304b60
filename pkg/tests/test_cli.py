import json

import pytest

from permshape import cli
from permshape.experiments import read_records_csv, run_trial
from permshape.samplers import RegimeSpec


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestShape:
    def test_worked_example(self, capsys):
        code, out, _ = run_cli(capsys, "shape", "--perm", "5 3 2 1 4 6")
        assert code == 0 and out.strip() == "3,1,1,1"

    def test_stdin(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO("2 1\n1 2 3\n"))
        code, out, _ = run_cli(capsys, "shape")
        assert code == 0 and out.splitlines() == ["1,1", "3"]

    def test_bad_word(self, capsys):
        code, _, err = run_cli(capsys, "shape", "--perm", "1 1")
        assert code == 1 and "error" in err


class TestProfile:
    def test_durfee_row_present(self, capsys):
        code, out, _ = run_cli(capsys, "profile", "--diagram", "7,5,2,1,1")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "t,L"
        assert "0,4" in lines

    def test_scaled(self, capsys):
        code, out, _ = run_cli(capsys, "profile", "--diagram", "2,1,1", "--n", "4", "--m", "0")
        assert code == 0
        assert out.splitlines()[0] == "s,F,Phi"


class TestDistance:
    def test_theorem_mode(self, capsys):
        code, out, _ = run_cli(capsys, "distance", "--diagram", "1", "--n", "1", "--m", "0")
        assert code == 0
        assert float(out.strip()) == pytest.approx(0.3633802276324186)

    def test_pair_mode(self, capsys):
        code, out, _ = run_cli(capsys, "distance", "--diagram", "1", "--other", "")
        assert code == 0
        dist, bound = map(float, out.split())
        assert dist == pytest.approx(2**0.5) and bound == pytest.approx(2**0.5)

    def test_needs_n_or_other(self, capsys):
        code, _, err = run_cli(capsys, "distance", "--diagram", "1")
        assert code == 1 and "error" in err


class TestSample:
    def test_deterministic(self, capsys):
        code1, out1, _ = run_cli(capsys, "sample", "--n", "6", "--seed", "3", "--count", "4")
        code2, out2, _ = run_cli(capsys, "sample", "--n", "6", "--seed", "3", "--count", "4")
        assert code1 == code2 == 0 and out1 == out2
        assert len(out1.splitlines()) == 4

    def test_seed_printed_when_missing(self, capsys):
        code, out, err = run_cli(capsys, "sample", "--n", "3")
        assert code == 0
        assert err.startswith("# seed ")

    def test_regime_flags(self, capsys):
        code, out, _ = run_cli(
            capsys, "sample", "--n", "4", "--seed", "0",
            "--ensemble", "uniform_in_cycle_type", "--cycle-type", "2,2",
        )
        assert code == 0

    def test_pipe_matches_single_trial_measurement(self, capsys):
        # sample | shape must equal the experiment's own per-trial measurement
        code, out, _ = run_cli(capsys, "sample", "--n", "40", "--seed", "77", "--count", "2")
        assert code == 0
        shapes = []
        for word in out.splitlines():
            _, shape_out, _ = run_cli(capsys, "shape", "--perm", word)
            shapes.append(shape_out.strip())
        for trial, text in enumerate(shapes):
            rec = run_trial(RegimeSpec(ensemble="uniform"), 40, trial, 77,
                            ("ell", "lambda1", "lambda2"))
            parts = tuple(int(x) for x in text.split(","))
            assert parts[0] == rec.lambda1 and len(parts) == rec.ell


class TestExperiment:
    def test_end_to_end(self, capsys, tmp_path):
        out_dir = tmp_path / "run"
        code, out, _ = run_cli(
            capsys, "experiment", "--n", "20,40", "--trials", "2", "--seed", "5",
            "--out", str(out_dir), "--measurements", "ell,lambda1",
        )
        assert code == 0
        records = read_records_csv(out_dir / "records.csv")
        assert len(records) == 4
        doc = json.loads((out_dir / "summary.json").read_text())
        assert any(e["statistic"] == "ell" for e in doc["entries"])

    def test_config_file(self, capsys, tmp_path):
        cfg = tmp_path / "exp.cfg"
        cfg.write_text(
            "ensemble = fpf_involution\nn_ladder = 10,20\ntrials = 2\nseed = 9\n"
            "measurements = ell\nout = " + str(tmp_path / "o") + "\n"
        )
        code, _, _ = run_cli(capsys, "experiment", "--config", str(cfg))
        assert code == 0
        assert (tmp_path / "o" / "records.csv").exists()

    def test_missing_n(self, capsys):
        code, _, err = run_cli(capsys, "experiment", "--seed", "1")
        assert code == 1 and "error" in err


class TestVerify:
    def test_deterministic_report(self, capsys):
        args = ["verify", "--suite", "profile-bound", "--pairs", "60", "--seed", "7"]
        code1, out1, _ = run_cli(capsys, *args)
        code2, out2, _ = run_cli(capsys, *args)
        assert code1 == code2 == 0
        assert out1 == out2
        assert json.loads(out1)["ok"] is True

    def test_convention_suite(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "convention", "--seed", "2")
        assert code == 0 and json.loads(out)["ok"] is True

    def test_failure_exit_code(self, capsys, monkeypatch):
        monkeypatch.setattr(cli, "run_suite", lambda *a, **k: {"ok": False, "suite": "x"})
        code, out, _ = run_cli(capsys, "verify", "--suite", "greene", "--seed", "0")
        assert code == 2


class TestKs:
    def test_files(self, capsys, tmp_path):
        a = tmp_path / "a.txt"
        b = tmp_path / "b.txt"
        a.write_text("1\n2\n")
        b.write_text("1.5\n2.5\n")
        code, out, _ = run_cli(capsys, "ks", "--a", str(a), "--b", str(b))
        assert code == 0 and float(out.strip()) == 0.5

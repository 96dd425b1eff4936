import json

import pytest

from netriad.cli import main

DATASET = """\
# three-layer toy multiplex
prox a b 9.0
prox b c 7.5
prox c d 6.0
prox d e 5.0
prox e f 4.0
prox b d 2.0
prox c e 1.5
prox d f 1.2
prox a d 1.0
face a b 1
face b c 1
face c d 1
face a c 1
calls a b 1
calls c d 1
calls e f 1
"""


@pytest.fixture
def dataset_path(tmp_path):
    path = tmp_path / "toy.edges"
    path.write_text(DATASET)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSimulate:
    def test_json_report(self, capsys):
        code, out, _ = run(capsys, "simulate", "--model", "uncorrelated",
                           "-N", "20", "-p", "0.5", "--realizations", "20",
                           "--seed", "7")
        assert code == 0
        report = json.loads(out)
        assert report["command"] == "simulate"
        assert report["config"]["seed"] == 7
        assert len(report["results"]["realizations"]) == 20
        assert report["results"]["summary"]["nj"]["n"] == 20

    def test_csv_sections(self, capsys):
        code, out, _ = run(capsys, "simulate", "--model", "mediated",
                           "-N", "15", "-p", "0.4", "--realizations", "5",
                           "--seed", "1", "--format", "csv")
        assert code == 0
        assert "# section realizations" in out
        assert "# section summary" in out
        assert "# section delta_histogram" in out
        header = [ln for ln in out.splitlines()
                  if ln.startswith("realization,")][0]
        assert header == "realization,nj,nj_partial,delta"

    def test_same_seed_byte_identical(self, tmp_path):
        args = ["simulate", "--model", "suppression", "-N", "20",
                "-p", "0.3", "-q", "1.0", "--realizations", "10",
                "--seed", "5", "--format", "csv"]
        f1, f2 = tmp_path / "a.csv", tmp_path / "b.csv"
        assert main(args + ["--output", str(f1)]) == 0
        assert main(args + ["--output", str(f2)]) == 0
        assert f1.read_bytes() == f2.read_bytes()

    def test_workers_do_not_change_output(self, tmp_path):
        args = ["simulate", "--model", "interpolated", "-N", "20",
                "-p", "0.4", "--mu", "0.5", "--realizations", "8",
                "--seed", "3"]
        f1, f2 = tmp_path / "w1.json", tmp_path / "w2.json"
        assert main(args + ["--workers", "1", "--output", str(f1)]) == 0
        assert main(args + ["--workers", "2", "--output", str(f2)]) == 0
        assert f1.read_bytes() == f2.read_bytes()


class TestSweepMu:
    def test_grid_shape(self, capsys):
        code, out, _ = run(capsys, "sweep-mu", "-N", "20",
                           "--p-values", "0.3,0.5", "--mu-grid", "0,1,3",
                           "--realizations", "4", "--seed", "2")
        assert code == 0
        points = json.loads(out)["results"]["points"]
        assert len(points) == 6
        assert points[0]["mu"] == 0.0 and points[2]["mu"] == 1.0

    def test_rewire_curves_add_columns(self, capsys):
        code, out, _ = run(capsys, "sweep-mu", "-N", "20",
                           "--p-values", "0.4", "--mu-grid", "0,1,2",
                           "--realizations", "3", "--seed", "2",
                           "--rewire-curves", "--format", "csv")
        assert code == 0
        header = [ln for ln in out.splitlines() if ln.startswith("p,")][0]
        assert "mean_delta_s" in header and "mean_delta_rm" in header

    def test_bad_grid_is_config_error(self, capsys):
        code, _, err = run(capsys, "sweep-mu", "--mu-grid", "1,0,5",
                           "--seed", "1")
        assert code == 2
        assert json.loads(err)["exit_code"] == 2


class TestPairwiseNull:
    def test_all_layer_pairs(self, capsys, dataset_path):
        code, out, _ = run(capsys, "pairwise-null", "--input", dataset_path,
                           "--realizations", "20", "--seed", "4")
        assert code == 0
        pairs = json.loads(out)["results"]["pairs"]
        assert [(p["layer_a"], p["layer_b"]) for p in pairs] == [
            ("prox", "face"), ("prox", "calls"), ("face", "calls")]
        for p in pairs:
            assert 0.0 <= p["observed_nj"] <= 1.0
            assert p["n_randomizations"] == 20

    def test_missing_file_is_data_error(self, capsys):
        code, _, err = run(capsys, "pairwise-null", "--input",
                           "/nonexistent/file.edges", "--seed", "1")
        assert code == 3
        record = json.loads(err)
        assert record["error"] == "DataError"


class TestTriad:
    def test_generated_triplet_rotations(self, capsys):
        code, out, _ = run(capsys, "triad", "--model", "mediated",
                           "-N", "40", "-p", "0.2", "--realizations", "10",
                           "--seed", "6")
        assert code == 0
        assignments = json.loads(out)["results"]["assignments"]
        assert [a["c"] for a in assignments] == ["C", "A", "B"]
        first = assignments[0]
        assert len(first["ensembles"]["delta_s"]) == 10

    def test_c_only(self, capsys, dataset_path):
        code, out, _ = run(capsys, "triad", "--input", dataset_path,
                           "--layers", "face", "calls", "prox",
                           "--realizations", "10", "--seed", "6",
                           "--c-only")
        assert code == 0
        assignments = json.loads(out)["results"]["assignments"]
        assert len(assignments) == 1
        assert assignments[0]["a"] == "face"
        assert assignments[0]["c"] == "prox"

    def test_needs_input_or_model(self, capsys):
        code, _, err = run(capsys, "triad", "--seed", "1")
        assert code == 2
        assert json.loads(err)["error"] == "ConfigError"

    def test_unknown_layer_is_data_error(self, capsys, dataset_path):
        code, _, err = run(capsys, "triad", "--input", dataset_path,
                           "--layers", "face", "calls", "nope",
                           "--seed", "1")
        assert code == 3
        assert json.loads(err)["error"] == "UnknownLayer"


class TestRssiSweep:
    def test_windows_report(self, capsys, dataset_path):
        code, out, _ = run(capsys, "rssi-sweep", "--input", dataset_path,
                           "--window-layer", "prox", "--a", "face",
                           "--b", "calls", "-k", "2",
                           "--realizations", "10", "--seed", "8")
        assert code == 0
        windows = json.loads(out)["results"]["windows"]
        assert len(windows) == 2
        assert windows[0]["weight_min"] >= windows[1]["weight_max"]
        assert windows[0]["n_edges"] == 5

    def test_too_few_edges_is_data_error(self, capsys, dataset_path):
        code, _, err = run(capsys, "rssi-sweep", "--input", dataset_path,
                           "--window-layer", "calls", "--a", "face",
                           "--b", "prox", "-k", "5", "--seed", "8")
        assert code == 3
        assert json.loads(err)["error"] == "TooFewEdges"


class TestErrorContract:
    def test_degenerate_math_exit_code(self, capsys):
        # p=0 generates empty layers everywhere: every realization is
        # degenerate and the summary itself is undefined
        code, _, err = run(capsys, "simulate", "--model", "uncorrelated",
                           "-N", "10", "-p", "0.0", "--realizations", "5",
                           "--seed", "1")
        assert code == 4
        record = json.loads(err)
        assert record["exit_code"] == 4

    def test_invalid_probability_is_config_error(self, capsys):
        code, _, err = run(capsys, "simulate", "--model", "uncorrelated",
                           "-N", "10", "-p", "1.5", "--realizations", "5",
                           "--seed", "1")
        assert code == 2
        assert json.loads(err)["error"] == "ConfigError"

    def test_argparse_errors_exit_2(self, capsys):
        assert run(capsys, "simulate")[0] == 2  # missing required flags
        assert run(capsys, "no-such-command", "--seed", "1")[0] == 2

    def test_version_exits_zero(self, capsys):
        assert run(capsys, "--version")[0] == 0

    def test_failed_run_writes_no_output(self, capsys, tmp_path):
        target = tmp_path / "artifact.json"
        code, _, _ = run(capsys, "simulate", "--model", "uncorrelated",
                         "-N", "10", "-p", "0.0", "--realizations", "5",
                         "--seed", "1", "--output", str(target))
        assert code == 4
        assert not target.exists()

"""Command-line surface: outputs, determinism & exit codes."""

from json                   import dumps, loads

import pytest

from numpy                  import ones, zeros
from pandas                 import read_csv

import gradatim.training.experiment as experiment_module

from gradatim.__main__      import run
from gradatim.datasets      import Dataset, load_csv, save_csv
from gradatim.forest        import LeafParams
from gradatim.training      import DivergenceError


TINY_RUN:   dict =  {
                        "trainer":  {
                                        "warmup_steps": 20,
                                        "backbone":     {"hidden_widths": [8], "feature_dim": 8},
                                        "forest":       {"tree_count": 2, "depth": 3},
                                        "optimizer":    {"learning_rate": 0.05, "steps_per_pace": 10, "batch_size": 16},
                                        "leaves":       {"iterations": 5},
                                        "pace":         {"pace_count": 2, "curriculum_count": 3}
                                    },
                        "dataset":  {"synthetic": {"n": 120}}
                    }


def _reject_constant_(token):
    raise ValueError(f"non-standard JSON constant {token}")


@pytest.fixture
def run_config(tmp_path):
    path =  tmp_path / "run.json"
    path.write_text(dumps(TINY_RUN))

    return path


class TestEvaluate:

    def test_perfect_constant(self, make_model, tmp_path, capsys):
        model =     make_model(targets = zeros(10), depth = 3)
        model.assign_leaves([LeafParams(zeros(4), ones(4)), LeafParams(zeros(4), ones(4))])
        model.save(tmp_path / "model.json")
        save_csv(Dataset(ids = range(5), x = ones((5, 4)), y = zeros(5)), tmp_path / "data.csv")

        code =      run(["evaluate", "--model", str(tmp_path / "model.json"), "--data", str(tmp_path / "data.csv")])

        assert code == 0
        assert loads(capsys.readouterr().out) == {"mae": 0.0, "cs": 100.0}

    def test_missing_model(self, make_dataset, tmp_path):
        save_csv(make_dataset(n = 4), tmp_path / "data.csv")

        assert run(["evaluate", "--model", str(tmp_path / "absent.json"), "--data", str(tmp_path / "data.csv")]) == 1

    def test_help_names_the_csv_header(self, make_dataset, tmp_path, capsys):
        assert run(["evaluate", "--help"]) == 0
        assert "id,y,x0,...,x{D-1}" in capsys.readouterr().out

        save_csv(make_dataset(n = 3, input_dim = 2), tmp_path / "data.csv")

        assert (tmp_path / "data.csv").read_text().splitlines()[0] == "id,y,x0,x1"


class TestGenerate:

    def test_spec_file(self, tmp_path):
        spec =      tmp_path / "spec.json"
        spec.write_text('{"n": 30, "feature_dim": 3, "seed": 2}')

        assert run(["generate", "--spec", str(spec), "--out", str(tmp_path / "bench.csv")]) == 0

        dataset =   load_csv(tmp_path / "bench.csv")

        assert dataset.num_samples == 30 and dataset.feature_dim == 3

    def test_malformed_spec(self, tmp_path):
        spec =      tmp_path / "spec.json"
        spec.write_text('{"n": ')

        assert run(["generate", "--spec", str(spec), "--out", str(tmp_path / "bench.csv")]) == 1

    def test_unknown_spec_key(self, tmp_path):
        spec =      tmp_path / "spec.json"
        spec.write_text('{"samples": 30}')

        assert run(["generate", "--spec", str(spec), "--out", str(tmp_path / "bench.csv")]) == 1


class TestTrain:

    def test_outputs_are_reproducible(self, run_config, tmp_path):
        for name in ("a", "b"):
            assert run(["train", "--config", str(run_config), "--out-dir", str(tmp_path / name), "--no-progress"]) == 0

        for output in ("model.json", "trace.csv", "entropy_bins.csv", "summary.json"):
            assert (tmp_path / "a" / output).read_bytes() == (tmp_path / "b" / output).read_bytes()

        trace =     read_csv(tmp_path / "a" / "trace.csv")

        assert trace["pace"].tolist() == [1, 2]

    def test_summary_without_rare_targets_is_strict_json(self, tmp_path):
        path =      tmp_path / "run.json"
        path.write_text(dumps({**TINY_RUN, "rare_threshold": 1000.0}))

        assert run(["train", "--config", str(path), "--out-dir", str(tmp_path / "out"), "--no-progress"]) == 0

        summary =   loads((tmp_path / "out" / "summary.json").read_text(), parse_constant = _reject_constant_)

        assert summary["rare_region_mae"] is None

    def test_unknown_config_key(self, tmp_path):
        path =  tmp_path / "run.json"
        path.write_text('{"trainer": {"epochs": 3}}')

        assert run(["train", "--config", str(path), "--out-dir", str(tmp_path / "out")]) == 1

    def test_divergence_exits_with_two(self, monkeypatch, tmp_path):
        def diverge(*args, **kwargs): raise DivergenceError(1, 3, float("nan"))

        monkeypatch.setattr(experiment_module, "run_training", diverge)

        assert run(["train", "--out-dir", str(tmp_path / "out")]) == 2

    def test_unexpected_error_exits_with_two(self, monkeypatch, tmp_path):
        def explode(*args, **kwargs): raise RuntimeError("boom")

        monkeypatch.setattr(experiment_module, "run_training", explode)

        assert run(["train", "--out-dir", str(tmp_path / "out")]) == 2


class TestAblate:

    def test_comparison_table(self, run_config, tmp_path):
        assert run(["ablate", "--config", str(run_config), "--out-dir", str(tmp_path), "--no-progress"]) == 0

        comparison =    read_csv(tmp_path / "comparison.csv")

        assert comparison.columns.tolist() == ["arm", "test_mae", "test_cs", "rare_region_mae"]
        assert comparison["arm"].tolist() == ["DRF", "SP-DRF", "SPUDRF"]

        for arm in ("DRF", "SP-DRF", "SPUDRF"):
            assert (tmp_path / arm / "trace.csv").exists()


class TestExitCodes:

    @pytest.mark.parametrize("argv", [
        [],
        ["bogus"],
        ["train"],
        ["train", "--out-dir", "out", "--epochs", "3"],
        ["evaluate", "--model", "m.json"],
    ])
    def test_usage_errors(self, argv):
        assert run(argv) == 1

    def test_version(self, capsys):
        assert run(["version"]) == 0
        assert capsys.readouterr().out == ""

    def test_help(self):
        assert run(["--help"]) == 0

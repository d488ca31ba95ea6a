"""Benchmark-scale behaviour on the default synthetic data (run with `-m slow`)."""

import pytest

from gradatim.configuration.run_config  import RunConfig
from gradatim.training                  import TrainConfig
from gradatim.training.experiment       import run_ablation, run_training


@pytest.mark.slow
def test_entropy_falls_as_targets_get_common(tmp_path):
    result =    run_training(RunConfig(trainer = TrainConfig(mode = "DRF")), tmp_path, progress = False)

    assert result.summary["entropy_bins"]["spearman"] <= -0.5


@pytest.mark.slow
def test_ablation_direction(tmp_path):
    comparison =    run_ablation(RunConfig(ablation_seeds = [0, 1, 2, 3, 4]), tmp_path, progress = False) \
                        .set_index("arm")

    assert comparison.loc["SPUDRF", "rare_region_mae"] <= comparison.loc["SP-DRF", "rare_region_mae"]
    assert comparison.loc["SPUDRF", "test_mae"] <= 1.05 * comparison.loc["DRF", "test_mae"]

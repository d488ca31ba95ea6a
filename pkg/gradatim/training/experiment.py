"""# gradatim.training.experiment

Seeded experiment runs behind the `train` & `ablate` commands, and the artifacts they write.
"""

__all__ =   [
                "ABLATION_ARMS",
                "COMPARISON_HEADER",
                "RunResult",
                "rare_region_mae",
                "run_ablation",
                "run_training",
            ]

from dataclasses                        import dataclass, replace
from logging                            import Logger
from math                               import nan
from pathlib                            import Path
from typing                             import Any, Dict, List, Optional, Union

from numpy                              import ndarray
from pandas                             import DataFrame

from gradatim.configuration.run_config  import RunConfig
from gradatim.datasets                  import Dataset
from gradatim.forest                    import ForestModel
from gradatim.metrics                   import EntropyBin, emit_entropy_bins, emit_summary, emit_table, \
                                               emit_trace, entropy_by_target_bin, \
                                               entropy_count_correlation, mae
from gradatim.training.report           import TrainReport
from gradatim.training.trainer          import Trainer
from gradatim.utilities                 import get_logger

# Initialize logger.
LOGGER:             Logger =    get_logger("experiment")

# Ablation arms, in table order.
ABLATION_ARMS:      List[str] = ["DRF", "SP-DRF", "SPUDRF"]

# Comparison table columns.
COMPARISON_HEADER:  List[str] = ["arm", "test_mae", "test_cs", "rare_region_mae"]

@dataclass
class RunResult:
    """# Outcome of One Training Run.

    ## Attributes:
        * model     (ForestModel):      Trained model.
        * report    (TrainReport):      Per-pace report.
        * train_set (Dataset):          Training samples.
        * test_set  (Dataset):          Test samples.
        * summary   (Dict[str, Any]):   Contents of summary.json.
    """
    model:      ForestModel
    report:     TrainReport
    train_set:  Dataset
    test_set:   Dataset
    summary:    Dict[str, Any]


def rare_region_mae(
    model:      ForestModel,
    dataset:    Dataset,
    threshold:  float
) -> float:
    """# MAE over Samples whose Target is at or above a Threshold (NaN when there are none)."""
    rare:   ndarray =   dataset.y >= threshold

    if not rare.any(): return nan

    return mae(model.predict(dataset.x[rare]), dataset.y[rare])


def run_training(
    config:     RunConfig,
    out_dir:    Union[str, Path],
    seed:       Optional[int] =     None,
    progress:   bool =              True
) -> RunResult:
    """# Train, then Write model.json, trace.csv, entropy_bins.csv & summary.json.

    ## Args:
        * config    (RunConfig):    Run configuration.
        * out_dir   (str | Path):   Output directory.
        * seed      (int):          Overrides both the training seed and the split seed.
        * progress  (bool):         Show progress bars. Defaults to True.

    ## Returns:
        * RunResult:    Model, report & summary.
    """
    out_dir:            Path =          Path(out_dir)

    if seed is not None:
        config =    replace(
                        config,
                        trainer =   replace(config.trainer, seed = seed),
                        dataset =   replace(config.dataset, split_seed = seed)
                    )

    train_set, test_set =               config.dataset.load()

    LOGGER.info(
        f"Loaded {train_set.num_samples} training & {test_set.num_samples} test samples "
        f"({train_set.feature_dim} features)"
    )

    trainer:            Trainer =       Trainer(
                                            config.trainer,
                                            cs_level =  config.cs_level,
                                            progress =  progress
                                        )
    model, report =                     trainer.train(train_set, test_set)

    bins:               List[EntropyBin] =  entropy_by_target_bin(model, train_set, config.bin_width)
    spearman:           float =             entropy_count_correlation(bins)

    summary:            Dict[str, Any] =    {
                                                "config":           config.to_dict(),
                                                "train_samples":    train_set.num_samples,
                                                "test_samples":     test_set.num_samples,
                                                "warmup":           report.warmup,
                                                "paces":            report.to_dict()["paces"],
                                                "entropy_bins":     {
                                                                        "bin_width":    config.bin_width,
                                                                        "bins":         len(bins),
                                                                        "spearman":     spearman
                                                                    },
                                                "rare_region_mae":  rare_region_mae(
                                                                        model,
                                                                        test_set,
                                                                        config.rare_threshold
                                                                    )
                                            }

    model.save(out_dir / "model.json")
    emit_trace(report.trace(), out_dir / "trace.csv")
    emit_entropy_bins(bins, out_dir / "entropy_bins.csv")
    emit_summary(summary, out_dir / "summary.json")

    return  RunResult(
                model =     model,
                report =    report,
                train_set = train_set,
                test_set =  test_set,
                summary =   summary
            )


def run_ablation(
    config:     RunConfig,
    out_dir:    Union[str, Path],
    progress:   bool =              True
) -> DataFrame:
    """# Train the DRF, SP-DRF & SPUDRF Arms under Shared Seeds.

    Every arm sees the same split and the same training seed. With `ablation_seeds`, each seed is
    run for every arm and the comparison holds per-arm medians; per-seed rows go to
    comparison_by_seed.csv.

    ## Args:
        * config    (RunConfig):    Run configuration; its trainer mode is overridden per arm.
        * out_dir   (str | Path):   Output directory.
        * progress  (bool):         Show progress bars. Defaults to True.

    ## Returns:
        * DataFrame:    Comparison table, one row per arm.
    """
    out_dir:    Path =                  Path(out_dir)
    seeds:      List[Optional[int]] =   list(config.ablation_seeds) or [None]
    rows:       List[List[Any]] =       []

    for seed in seeds:

        for arm in ABLATION_ARMS:

            LOGGER.info(f"Ablation arm {arm}" + (f", seed {seed}" if seed is not None else ""))

            arm_config: RunConfig =     replace(config, trainer = replace(config.trainer, mode = arm))
            arm_dir:    Path =          out_dir / arm if seed is None else out_dir / f"seed-{seed}" / arm
            result:     RunResult =     run_training(arm_config, arm_dir, seed = seed, progress = progress)
            final =                     result.report.final.test

            rows.append([
                arm,
                config.trainer.seed if seed is None else seed,
                final.mae if final else nan,
                final.cs if final else nan,
                result.summary["rare_region_mae"]
            ])

    by_seed:    DataFrame =     DataFrame(rows, columns = ["arm", "seed"] + COMPARISON_HEADER[1:])
    comparison: DataFrame =     by_seed.drop(columns = "seed") \
                                       .groupby("arm", sort = False) \
                                       .median() \
                                       .reset_index()

    emit_table(by_seed.values.tolist(), by_seed.columns, out_dir / "comparison_by_seed.csv")
    emit_table(comparison.values.tolist(), COMPARISON_HEADER, out_dir / "comparison.csv")

    return comparison

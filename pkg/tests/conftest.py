"""Shared fixtures: small seeded forests, datasets & training configurations."""

from typing                     import Callable, Optional, Sequence

import pytest

from numpy                      import arange, ndarray
from numpy.random               import default_rng

from gradatim.backbone          import BackboneConfig
from gradatim.datasets          import Dataset
from gradatim.forest            import ForestConfig, ForestModel, LeafUpdateConfig
from gradatim.selection         import PaceConfig
from gradatim.training          import OptimizerConfig, TrainConfig
from gradatim.utilities         import spawn_generators


@pytest.fixture
def make_dataset() -> Callable[..., Dataset]:
    """Noisy linear-sinusoidal regression samples."""
    def factory(n: int = 64, input_dim: int = 4, seed: int = 0, name: str = "dataset") -> Dataset:
        rng =   default_rng(seed)
        x:  ndarray =   rng.normal(size = (n, input_dim))
        y:  ndarray =   20.0 + 5.0 * x[:, 0] + 3.0 * (x[:, 1] ** 2) + rng.normal(0.0, 0.5, size = n)

        return Dataset(ids = arange(n), x = x, y = y, name = name)

    return factory


@pytest.fixture
def make_model() -> Callable[..., ForestModel]:
    """Seeded forest over a small backbone."""
    def factory(
        targets:        ndarray,
        input_dim:      int =           4,
        hidden:         Sequence[int] = (6,),
        feature_dim:    int =           8,
        trees:          int =           2,
        depth:          int =           3,
        seed:           int =           0
    ) -> ForestModel:
        return  ForestModel.initialize(
                    input_dim =         input_dim,
                    targets =           targets,
                    backbone_config =   BackboneConfig(hidden_widths = list(hidden), feature_dim = feature_dim),
                    forest_config =     ForestConfig(tree_count = trees, depth = depth),
                    generators =        spawn_generators(seed, trees + 1)
                )

    return factory


@pytest.fixture
def tiny_config() -> Callable[..., TrainConfig]:
    """Fast training configuration; any field can be overridden."""
    def factory(mode: str = "SPUDRF", seed: int = 0, pace: Optional[PaceConfig] = None, **overrides) -> TrainConfig:
        values =    {
                        "mode":         mode,
                        "seed":         seed,
                        "warmup_steps": 20,
                        "backbone":     BackboneConfig(hidden_widths = [8], feature_dim = 8),
                        "forest":       ForestConfig(tree_count = 2, depth = 3),
                        "optimizer":    OptimizerConfig(learning_rate = 0.05, steps_per_pace = 15, batch_size = 16),
                        "leaves":       LeafUpdateConfig(iterations = 5),
                        "pace":         pace or PaceConfig(pace_count = 3, curriculum_count = 4)
                    }
        values.update(overrides)

        return TrainConfig(**values)

    return factory

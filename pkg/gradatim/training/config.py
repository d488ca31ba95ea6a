"""# gradatim.training.config

Trainer & optimizer configuration.
"""

__all__ =   [
                "OptimizerConfig",
                "TrainConfig",
            ]

from dataclasses                        import asdict, dataclass, field, replace
from typing                             import Any, Dict, Literal, Optional

from gradatim.backbone.config           import BackboneConfig
from gradatim.configuration.exceptions  import InvalidConfigValueError
from gradatim.forest.config             import ForestConfig, LeafUpdateConfig
from gradatim.selection.config          import PaceConfig

# Training regimes.
Mode =  Literal["DRF", "SP-DRF", "SPUDRF"]

@dataclass
class OptimizerConfig:
    """# Backbone Optimizer Configuration.

    ## Attributes:
        * learning_rate         (float):    Initial SGD step size. Defaults to 0.2.
        * decay_factor          (float):    Learning-rate multiplier per decay period. Defaults to 0.5.
        * decay_every           (int):      Gradient steps per decay period. Defaults to 1000.
        * steps_per_pace        (int):      Gradient steps in every pace. Defaults to 2000.
        * batch_size            (int):      Samples per gradient step. Defaults to 32.
        * leaf_update_interval  (int):      Gradient steps between leaf updates; None updates the 
                                            leaves once, after the last step of a pace. Defaults to 
                                            None.
    """
    learning_rate:          float =         0.2
    decay_factor:           float =         0.5
    decay_every:            int =           1000
    steps_per_pace:         int =           2000
    batch_size:             int =           32
    leaf_update_interval:   Optional[int] = None

    def __post_init__(self) -> None:
        """# Validate Configuration."""
        if not self.learning_rate > 0:
            raise InvalidConfigValueError("learning_rate", self.learning_rate, "must be > 0")

        if not 0 < self.decay_factor <= 1:
            raise InvalidConfigValueError("decay_factor", self.decay_factor, "must lie in (0, 1]")

        if self.decay_every < 1:
            raise InvalidConfigValueError("decay_every", self.decay_every, "must be >= 1")

        if self.steps_per_pace < 0:
            raise InvalidConfigValueError("steps_per_pace", self.steps_per_pace, "must be >= 0")

        if self.batch_size < 1:
            raise InvalidConfigValueError("batch_size", self.batch_size, "must be >= 1")

        if self.leaf_update_interval is not None and self.leaf_update_interval < 1:
            raise InvalidConfigValueError("leaf_update_interval", self.leaf_update_interval, "must be >= 1")


@dataclass
class TrainConfig:
    """# Training Configuration.

    ## Attributes:
        * mode              (str):              "DRF", "SP-DRF" or "SPUDRF". Defaults to "SPUDRF".
        * seed              (int):              Root seed of every random stream. Defaults to 0.
        * warmup_steps      (int):              Gradient steps on all samples before the first pace. 
                                                Defaults to 1000.
        * entropy_gradient  (bool):             Also ascend γ Σ v H through the backbone. Defaults 
                                                to False.
        * backbone          (BackboneConfig):   Feature extractor settings.
        * forest            (ForestConfig):     Tree settings.
        * optimizer         (OptimizerConfig):  Gradient step settings.
        * leaves            (LeafUpdateConfig): Leaf update settings.
        * pace              (PaceConfig):       Self-paced schedule.
    """
    mode:               Mode =              "SPUDRF"
    seed:               int =               0
    warmup_steps:       int =               1000
    entropy_gradient:   bool =              False
    backbone:           BackboneConfig =    field(default_factory = BackboneConfig)
    forest:             ForestConfig =      field(default_factory = ForestConfig)
    optimizer:          OptimizerConfig =   field(default_factory = OptimizerConfig)
    leaves:             LeafUpdateConfig =  field(default_factory = LeafUpdateConfig)
    pace:               PaceConfig =        field(default_factory = PaceConfig)

    def __post_init__(self) -> None:
        """# Validate Configuration."""
        if self.mode not in ("DRF", "SP-DRF", "SPUDRF"):
            raise InvalidConfigValueError("mode", self.mode, "expected DRF, SP-DRF or SPUDRF")

        if self.warmup_steps < 0:
            raise InvalidConfigValueError("warmup_steps", self.warmup_steps, "must be >= 0")

    # METHODS ======================================================================================

    def resolved(self) -> "TrainConfig":
        """# Effective Configuration After Mode Normalization.

        DRF trains a single pace on every sample with unit weights; SP-DRF ranks by likelihood 
        alone and never duplicates samples; SPUDRF keeps the schedule as configured, including 
        `weighting`. Hard weighting under SPUDRF is an experimental variant; mixture weighting is 
        the reference setting, and the trainer logs a warning for the hard variant.

        ## Returns:
            * TrainConfig:  Normalized copy.
        """
        if self.mode == "DRF":
            return replace(self, pace = replace(
                self.pace,
                pace_count =            1,
                initial_fraction =      1.0,
                gamma_initial =         0.0,
                weighting =             "hard",
                curriculum_count =      0,
                curriculum_threshold =  None
            ))

        if self.mode == "SP-DRF":
            return replace(self, pace = replace(
                self.pace,
                gamma_initial =         0.0,
                curriculum_count =      0,
                curriculum_threshold =  None
            ))

        return replace(self)

    def to_dict(self) -> Dict[str, Any]:
        """# Nested Mapping of Every Field."""
        return asdict(self)

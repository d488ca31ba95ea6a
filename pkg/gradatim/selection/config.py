"""# gradatim.selection.config

Self-paced schedule configuration.
"""

__all__ = ["PaceConfig"]

from dataclasses                        import dataclass
from typing                             import Literal, Optional

from gradatim.configuration.exceptions  import InvalidConfigValueError

@dataclass
class PaceConfig:
    """# Pace Schedule Configuration.

    ## Attributes:
        * pace_count            (int):      Number of paces. Defaults to 10.
        * initial_fraction      (float):    Share of samples selected at the first pace; later 
                                            paces add equal shares of the remainder. Defaults to 0.5.
        * gamma_initial         (float):    Entropy coefficient at the first pace. Defaults to 15.
        * gamma_decay           (float):    Multiplier applied to the coefficient per pace; the last 
                                            pace always uses 0. Defaults to 0.5.
        * soft_fraction         (float):    Share of selected samples given fractional weights. 
                                            Defaults to 0.1.
        * weighting             (str):      "soft" for mixture weights, "hard" for binary weights. 
                                            Defaults to "soft".
        * curriculum_count      (int):      Number of highest-entropy samples duplicated per pace. 
                                            Defaults to 40.
        * curriculum_copies     (int):      Copies appended per duplicated sample. Defaults to 1.
        * curriculum_threshold  (float):    When set, duplicate every sample whose entropy exceeds 
                                            it instead of a fixed count. Defaults to None.
    """
    pace_count:             int =                       10
    initial_fraction:       float =                     0.5
    gamma_initial:          float =                     15.0
    gamma_decay:            float =                     0.5
    soft_fraction:          float =                     0.10
    weighting:              Literal["soft", "hard"] =   "soft"
    curriculum_count:       int =                       40
    curriculum_copies:      int =                       1
    curriculum_threshold:   Optional[float] =           None

    def __post_init__(self) -> None:
        """# Validate Configuration."""
        if self.pace_count < 1:
            raise InvalidConfigValueError("pace_count", self.pace_count, "must be >= 1")

        if not 0 < self.initial_fraction <= 1:
            raise InvalidConfigValueError("initial_fraction", self.initial_fraction, "must lie in (0, 1]")

        if self.gamma_initial < 0:
            raise InvalidConfigValueError("gamma_initial", self.gamma_initial, "must be >= 0")

        if not 0 <= self.gamma_decay <= 1:
            raise InvalidConfigValueError("gamma_decay", self.gamma_decay, "must lie in [0, 1]")

        if not 0 < self.soft_fraction < 1:
            raise InvalidConfigValueError("soft_fraction", self.soft_fraction, "must lie in (0, 1)")

        if self.weighting not in ("soft", "hard"):
            raise InvalidConfigValueError("weighting", self.weighting, "expected soft or hard")

        if self.curriculum_count < 0:
            raise InvalidConfigValueError("curriculum_count", self.curriculum_count, "must be >= 0")

        if self.curriculum_copies < 1:
            raise InvalidConfigValueError("curriculum_copies", self.curriculum_copies, "must be >= 1")

    # METHODS ======================================================================================

    def fraction(self,
        pace_index: int
    ) -> float:
        """# Target Selected Fraction at a Pace (1-Based).

        f_t = f_1 + (1 − f_1)(t − 1)/(P − 1), reaching 1 at the final pace.
        """
        if self.pace_count == 1 or pace_index >= self.pace_count: return 1.0

        growth: float = (1.0 - self.initial_fraction) * (pace_index - 1) / (self.pace_count - 1)

        return self.initial_fraction + growth

    def gamma(self,
        pace_index: int
    ) -> float:
        """# Entropy Coefficient at a Pace (1-Based); Zero at the Final Pace."""
        if pace_index >= self.pace_count: return 0.0

        return self.gamma_initial * self.gamma_decay ** (pace_index - 1)

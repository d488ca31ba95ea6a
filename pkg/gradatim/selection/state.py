"""# gradatim.selection.state

Thresholds and per-pace selection state.
"""

__all__ =   [
                "SelectionState",
                "Thresholds",
            ]

from dataclasses                        import dataclass, field
from typing                             import Any, Dict, Literal

from numpy                              import ndarray, zeros_like

from gradatim.selection.exceptions      import InvalidThresholdsError

@dataclass(frozen = True)
class Thresholds:
    """# Selection Thresholds.

    Weights are computed from `scores − shift`: a sample is selected when its shifted score 
    exceeds −λ and fully weighted when it reaches −λ′.

    ## Attributes:
        * lam       (float):    Outer threshold λ > 0.
        * lam_prime (float):    Inner threshold λ′ in (0, λ).
        * shift     (float):    Constant subtracted from scores so both thresholds are positive.
    """
    lam:        float
    lam_prime:  float
    shift:      float = 0.0

    def __post_init__(self) -> None:
        """# Validate λ > λ′ > 0."""
        if not self.lam > self.lam_prime > 0:
            raise InvalidThresholdsError(lam = self.lam, lam_prime = self.lam_prime)

    @property
    def zeta(self) -> float:
        """# Pace Parameter ζ = (1/λ′ − 1/λ)⁻¹"""
        return 1.0 / (1.0 / self.lam_prime - 1.0 / self.lam)


@dataclass
class SelectionState:
    """# Selection State of One Pace.

    ## Attributes:
        * pace_index    (int):          Pace number, starting at 1.
        * fraction      (float):        Target share of selected samples.
        * gamma         (float):        Entropy coefficient γ.
        * thresholds    (Thresholds):   Calibrated thresholds.
        * scores        (ndarray):      Shifted, tie-separated scores the weights derive from [N].
        * weights       (ndarray):      Sample weights v in [0, 1] [N].
        * weighting     (str):          "soft" or "hard".
    """
    pace_index: int
    fraction:   float
    gamma:      float
    thresholds: Thresholds
    scores:     ndarray =                   field(repr = False)
    weights:    ndarray =                   field(repr = False)
    weighting:  Literal["soft", "hard"] =   "soft"

    # PROPERTIES ===================================================================================

    @property
    def lam(self) -> float:
        """# Outer Threshold λ"""
        return self.thresholds.lam

    @property
    def lam_prime(self) -> float:
        """# Inner Threshold λ′"""
        return self.thresholds.lam_prime

    @property
    def zeta(self) -> float:
        """# Pace Parameter ζ"""
        return self.thresholds.zeta

    @property
    def score_shift(self) -> float:
        """# Constant Subtracted from Raw Scores"""
        return self.thresholds.shift

    @property
    def selected(self) -> ndarray:
        """# Samples Above −λ [N]"""
        return self.scores > -self.lam

    @property
    def soft(self) -> ndarray:
        """# Samples in the Fractional Band (−λ, −λ′) [N]; Empty under Hard Weighting"""
        if self.weighting == "hard": return zeros_like(self.scores, dtype = bool)

        return self.selected & (self.scores < -self.lam_prime)

    @property
    def n_selected(self) -> int:
        """# Number of Selected Samples"""
        return int(self.selected.sum())

    @property
    def n_soft(self) -> int:
        """# Number of Fractionally Weighted Samples"""
        return int(self.soft.sum())

    @property
    def n_zero(self) -> int:
        """# Number of Samples with Zero Weight"""
        return int((self.weights == 0).sum())

    # METHODS ======================================================================================

    def to_dict(self) -> Dict[str, Any]:
        """# Scalar Summary for Traces."""
        return  {
                    "pace":         self.pace_index,
                    "lambda":       self.lam,
                    "lambda_prime": self.lam_prime,
                    "gamma":        self.gamma,
                    "zeta":         self.zeta,
                    "fraction":     self.fraction,
                    "score_shift":  self.score_shift,
                    "n_selected":   self.n_selected,
                    "n_soft":       self.n_soft,
                    "n_zero":       self.n_zero
                }

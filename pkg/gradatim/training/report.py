"""# gradatim.training.report

Evaluation results & the per-pace training report.
"""

__all__ =   [
                "EvaluationResult",
                "PaceRecord",
                "TrainReport",
            ]

from dataclasses                    import asdict, dataclass, field
from math                           import nan
from typing                         import Any, Dict, List, Optional

from gradatim.metrics               import TraceRecord

@dataclass(frozen = True)
class EvaluationResult:
    """# Metrics of a Model on a Dataset.

    ## Attributes:
        * mae           (float):    Mean absolute error.
        * cs            (float):    Cumulative score at the configured level, in percent.
        * mean_entropy  (float):    Mean forest entropy bound.
        * n_samples     (int):      Number of evaluated samples.
    """
    mae:            float
    cs:             float
    mean_entropy:   float
    n_samples:      int

    def to_dict(self) -> Dict[str, Any]:
        """# Serialize to a Mapping."""
        return asdict(self)


@dataclass
class PaceRecord:
    """# Record of One Executed Pace.

    ## Attributes:
        * pace          (int):                  Pace number, starting at 1.
        * lam           (float):                Outer threshold λ.
        * lam_prime     (float):                Inner threshold λ′.
        * gamma         (float):                Entropy coefficient γ.
        * zeta          (float):                Pace parameter ζ.
        * fraction      (float):                Target selected share.
        * score_shift   (float):                Constant subtracted from scores.
        * n_samples     (int):                  Samples ranked in this pace.
        * n_selected    (int):                  Samples with positive weight.
        * n_soft        (int):                  Samples with fractional weight.
        * n_zero        (int):                  Samples with zero weight.
        * n_duplicates  (int):                  Samples appended by curriculum reconstruction.
        * n_floored     (int):                  Samples whose log-density hit the floor.
        * batch_seed    (int):                  Seed of the pace's mini-batch order.
        * train         (EvaluationResult):     Training-set metrics after the pace.
        * test          (EvaluationResult):     Test-set metrics after the pace, if a test set was 
                                                given.
        * leaves        (List[List[Dict]]):     Leaf parameters of every tree after the pace.
    """
    pace:           int
    lam:            float
    lam_prime:      float
    gamma:          float
    zeta:           float
    fraction:       float
    score_shift:    float
    n_samples:      int
    n_selected:     int
    n_soft:         int
    n_zero:         int
    n_duplicates:   int
    n_floored:      int
    batch_seed:     int
    train:          EvaluationResult
    test:           Optional[EvaluationResult] =    None
    leaves:         List[List[Dict[str, float]]] =  field(default_factory = list, repr = False)

    def to_trace(self) -> TraceRecord:
        """# Reduce to a Trace Row."""
        return  TraceRecord(
                    pace =          self.pace,
                    lam =           self.lam,
                    lam_prime =     self.lam_prime,
                    gamma =         self.gamma,
                    n_selected =    self.n_selected,
                    n_soft =        self.n_soft,
                    n_zero =        self.n_zero,
                    train_mae =     self.train.mae,
                    test_mae =      self.test.mae if self.test else nan,
                    test_cs =       self.test.cs if self.test else nan,
                    mean_entropy =  self.train.mean_entropy,
                    score_shift =   self.score_shift
                )

    def to_dict(self) -> Dict[str, Any]:
        """# Serialize to a Mapping."""
        return asdict(self)


@dataclass
class TrainReport:
    """# Training Report.

    ## Attributes:
        * mode      (str):                  Training regime.
        * config    (Dict[str, Any]):       Effective (resolved) training configuration.
        * warmup    (Dict[str, int]):       Warmup step count & batch seed.
        * paces     (List[PaceRecord]):     One record per executed pace.
    """
    mode:       str
    config:     Dict[str, Any]
    warmup:     Dict[str, int] =    field(default_factory = dict)
    paces:      List[PaceRecord] =  field(default_factory = list)

    @property
    def final(self) -> Optional[PaceRecord]:
        """# Record of the Last Pace"""
        return self.paces[-1] if self.paces else None

    def trace(self) -> List[TraceRecord]:
        """# Trace Rows, One per Pace."""
        return [record.to_trace() for record in self.paces]

    def to_dict(self) -> Dict[str, Any]:
        """# Serialize to a JSON-Ready Mapping."""
        return asdict(self)

"""# gradatim.training

Alternating self-paced training of deep regression forests.
"""

__all__ =   [
                # Configuration
                "OptimizerConfig",
                "TrainConfig",

                # Objective
                "GradientResult",
                "objective_and_gradient",

                # Training
                "Trainer",
                "evaluate",
                "train",
                "weighted_gradient_epoch",

                # Reports
                "EvaluationResult",
                "PaceRecord",
                "TrainReport",

                # Exceptions
                "DivergenceError",
            ]

from gradatim.training.config       import *
from gradatim.training.exceptions   import *
from gradatim.training.gradient     import *
from gradatim.training.report       import *
from gradatim.training.trainer      import *

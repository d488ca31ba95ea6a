"""# gradatim.selection

Self-paced sample selection: scores, hard & mixture weights, threshold calibration, the pace 
scheduler and curriculum reconstruction.
"""

__all__ =   [
                # Configuration
                "PaceConfig",

                # State
                "SelectionState",
                "Thresholds",

                # Scores
                "score_shift",
                "selection_scores",
                "separate_ties",

                # Weights
                "hard_weights",
                "soft_weights",

                # Calibration
                "calibrate_lambda",
                "calibrate_lambda_prime",
                "calibrate_thresholds",
                "rank_count",

                # Scheduling
                "advance_pace",
                "begin_pace",
                "first_pace",

                # Curriculum
                "curriculum_candidates",
                "curriculum_reconstruction",

                # Exceptions
                "EmptyScoresError",
                "EmptySelectionError",
                "InvalidThresholdsError",
                "LengthMismatchError",
                "NonFiniteScoresError",
                "PaceExhaustedError",
                "SelectionError",
            ]

from gradatim.selection.calibration import *
from gradatim.selection.config      import PaceConfig
from gradatim.selection.curriculum  import *
from gradatim.selection.exceptions  import *
from gradatim.selection.scheduler   import *
from gradatim.selection.scores      import *
from gradatim.selection.state       import *
from gradatim.selection.weights     import *

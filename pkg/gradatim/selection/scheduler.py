"""# gradatim.selection.scheduler

Pace scheduler: per-pace fraction & γ, fresh scores, thresholds and weights.
"""

__all__ =   [
                "advance_pace",
                "begin_pace",
                "first_pace",
            ]

from logging                        import Logger
from typing                         import Optional, Sequence

from numpy                          import ndarray

from gradatim.selection.calibration import calibrate_thresholds
from gradatim.selection.config      import PaceConfig
from gradatim.selection.exceptions  import PaceExhaustedError
from gradatim.selection.scores      import selection_scores
from gradatim.selection.state       import SelectionState
from gradatim.selection.weights     import hard_weights, soft_weights
from gradatim.utilities             import get_logger

# Initialize logger.
LOGGER: Logger =    get_logger("pace-scheduler")


def begin_pace(
    pace_index:         int,
    config:             PaceConfig,
    log_likelihoods:    ndarray,
    entropies:          ndarray,
    ids:                Optional[Sequence[int]] =   None
) -> SelectionState:
    """# Compute the Selection State of a Pace.

    ## Args:
        * pace_index        (int):              Pace number in [1, pace_count].
        * config            (PaceConfig):       Schedule configuration.
        * log_likelihoods   (ndarray):          Current forest log-likelihoods [N].
        * entropies         (ndarray):          Current forest entropy bounds [N].
        * ids               (Sequence[int]):    Sample identifiers breaking ties. Defaults to 
                                                positions.

    ## Raises:
        * PaceExhaustedError:   If the pace index exceeds the configured count.

    ## Returns:
        * SelectionState:   Thresholds, weights & counts of the pace.
    """
    if not 1 <= pace_index <= config.pace_count: raise PaceExhaustedError(pace_count = config.pace_count)

    gamma:      float =     config.gamma(pace_index)
    fraction:   float =     config.fraction(pace_index)

    thresholds, scores =    calibrate_thresholds(
                                scores =            selection_scores(log_likelihoods, entropies, gamma),
                                target_fraction =   fraction,
                                soft_fraction =     config.soft_fraction,
                                ids =               ids
                            )

    weights:    ndarray =   hard_weights(scores, thresholds.lam) if config.weighting == "hard" \
                            else soft_weights(scores, thresholds.lam, thresholds.lam_prime)

    state:  SelectionState =    SelectionState(
                                    pace_index =    pace_index,
                                    fraction =      fraction,
                                    gamma =         gamma,
                                    thresholds =    thresholds,
                                    scores =        scores,
                                    weights =       weights,
                                    weighting =     config.weighting
                                )

    LOGGER.debug(
        f"Pace {pace_index}: fraction {fraction:.4f}, gamma {gamma}, lambda {state.lam:.6g}, "
        f"lambda' {state.lam_prime:.6g}, selected {state.n_selected}/{len(weights)}"
    )

    return state


def first_pace(
    config:             PaceConfig,
    log_likelihoods:    ndarray,
    entropies:          ndarray,
    ids:                Optional[Sequence[int]] =   None
) -> SelectionState:
    """# Selection State of Pace 1."""
    return begin_pace(1, config, log_likelihoods, entropies, ids)


def advance_pace(
    state:              SelectionState,
    config:             PaceConfig,
    log_likelihoods:    ndarray,
    entropies:          ndarray,
    ids:                Optional[Sequence[int]] =   None
) -> SelectionState:
    """# Move to the Next Pace.

    The target fraction grows by an equal share of the remainder, γ decays (and is zero at the 
    final pace), and both thresholds are recalibrated against scores computed from the fresh 
    log-likelihoods & entropies.

    ## Args:
        * state             (SelectionState):   State of the current pace.
        * config            (PaceConfig):       Schedule configuration.
        * log_likelihoods   (ndarray):          Fresh forest log-likelihoods [N].
        * entropies         (ndarray):          Fresh forest entropy bounds [N].
        * ids               (Sequence[int]):    Sample identifiers breaking ties.

    ## Raises:
        * PaceExhaustedError:   If `state` is already at the final pace.

    ## Returns:
        * SelectionState:   State of the next pace.
    """
    if state.pace_index >= config.pace_count: raise PaceExhaustedError(pace_count = config.pace_count)

    return begin_pace(state.pace_index + 1, config, log_likelihoods, entropies, ids)

"""# gradatim.selection.calibration

Thresholds λ & λ′ calibrated from target fractions.

Calibration works on tie-separated scores, so every threshold lands strictly between two scores 
and selects an exact count. Callers compute weights from the same separated scores.
"""

__all__ =   [
                "calibrate_lambda",
                "calibrate_lambda_prime",
                "calibrate_thresholds",
                "rank_count",
            ]

from math                           import ceil, floor
from typing                         import Optional, Sequence, Tuple

from numpy                          import asarray, float64, ndarray, sort

from gradatim.exceptions            import UsageError
from gradatim.selection.exceptions  import EmptyScoresError, EmptySelectionError
from gradatim.selection.scores      import score_shift, separate_ties
from gradatim.selection.state       import Thresholds


def rank_count(
    fraction:   float,
    total:      int
) -> int:
    """# ceil(fraction · total), Robust to Binary Rounding of the Product."""
    return ceil(round(fraction * total, 9))


def _between_(
    upper:  float,
    lower:  float
) -> float:
    """# A Value t with lower <= t < upper, Preferring the Midpoint."""
    middle: float = 0.5 * (upper + lower)

    return middle if lower <= middle < upper else lower


def _below_(
    value:  float
) -> float:
    """# A Value Strictly Below `value`."""
    return value - 1.0 if value - 1.0 < value else value - abs(value)


def calibrate_lambda(
    scores:             ndarray,
    target_fraction:    float,
    ids:                Optional[Sequence[int]] =   None
) -> float:
    """# Outer Threshold λ Selecting an Exact Count.

    Exactly m = ceil(target_fraction · N) separated scores exceed −λ. The cut lies halfway between 
    the m-th and (m + 1)-th ranked scores; with everything selected it lies one unit below the 
    lowest score.

    ## Args:
        * scores            (ndarray):          Scores [N].
        * target_fraction   (float):            Share to select, in (0, 1].
        * ids               (Sequence[int]):    Identifiers breaking ties. Defaults to positions.

    ## Raises:
        * EmptyScoresError: If there are no scores.

    ## Returns:
        * float:    λ (not necessarily positive for unshifted scores).
    """
    if not 0 < target_fraction <= 1:
        raise UsageError(f"Target fraction must lie in (0, 1], got {target_fraction}")

    ranked: ndarray =   -sort(-separate_ties(scores, ids))

    if len(ranked) == 0: raise EmptyScoresError()

    m:      int =       min(len(ranked), max(1, rank_count(target_fraction, len(ranked))))

    if m == len(ranked): return -_below_(float(ranked[-1]))

    return -_between_(float(ranked[m - 1]), float(ranked[m]))


def calibrate_lambda_prime(
    scores:         ndarray,
    lam:            float,
    soft_fraction:  float,
    ids:            Optional[Sequence[int]] =   None
) -> Thresholds:
    """# Inner Threshold λ′ Bounding the Fractional Band.

    Of the m separated scores above −λ, the lowest k = ceil(soft_fraction · m) fall in 
    (−λ, −λ′) and the rest reach −λ′. If −λ′ would not be negative, both thresholds are moved by 
    a shift c and weights must be computed from `scores − c`.

    ## Args:
        * scores        (ndarray):          Scores [N].
        * lam           (float):            Outer threshold λ from `calibrate_lambda`.
        * soft_fraction (float):            Share of selected samples in the band, in (0, 1).
        * ids           (Sequence[int]):    Identifiers breaking ties. Defaults to positions.

    ## Raises:
        * EmptySelectionError:  If no score exceeds −λ.

    ## Returns:
        * Thresholds:   λ, λ′ & the shift.
    """
    if not 0 < soft_fraction < 1:
        raise UsageError(f"Soft fraction must lie in (0, 1), got {soft_fraction}")

    separated:  ndarray =   separate_ties(scores, ids)
    cut:        float =     -lam
    ranked:     ndarray =   -sort(-separated[separated > cut])
    m:          int =       len(ranked)

    if m == 0: raise EmptySelectionError()

    k:          int =       min(m, rank_count(soft_fraction, m))

    # Place the inner cut t' so that exactly k selected scores fall below it.
    if k == 0:
        inner:  float =     _between_(float(ranked[-1]), cut)
        inner =             float(ranked[-1]) if inner <= cut else inner

    elif k == m:
        top:    float =     float(ranked[0])
        inner:  float =     0.5 * top if top < 0 else top + 1.0

    else:
        upper:  float =     float(ranked[m - k - 1])
        lower:  float =     float(ranked[m - k])
        middle: float =     0.5 * (upper + lower)
        inner:  float =     middle if lower < middle <= upper else upper

    shift:      float =     0.0 if inner < 0 else floor(inner) + 1.0

    return Thresholds(lam = -(cut - shift), lam_prime = -(inner - shift), shift = shift)


def calibrate_thresholds(
    scores:         ndarray,
    target_fraction:float,
    soft_fraction:  float,
    ids:            Optional[Sequence[int]] =   None
) -> Tuple[Thresholds, ndarray]:
    """# Calibrate Both Thresholds with a Recorded Shift.

    Scores are first shifted below zero, then tie-separated, so λ > λ′ > 0 holds without further 
    adjustment and the returned scores can be thresholded directly.

    ## Args:
        * scores            (ndarray):          Raw scores [N].
        * target_fraction   (float):            Share to select, in (0, 1].
        * soft_fraction     (float):            Share of selected samples in the band, in (0, 1).
        * ids               (Sequence[int]):    Identifiers breaking ties. Defaults to positions.

    ## Returns:
        * Thresholds:   λ, λ′ & the total shift applied to raw scores.
        * ndarray:      Shifted, separated scores [N] to compute weights from.
    """
    raw:        ndarray =       asarray(scores, dtype = float64).reshape(-1)

    if len(raw) == 0: raise EmptyScoresError()

    shift:      float =         score_shift(raw)
    shifted:    ndarray =       separate_ties(raw - shift, ids)

    lam:        float =         calibrate_lambda(shifted, target_fraction, ids)
    thresholds: Thresholds =    calibrate_lambda_prime(shifted, lam, soft_fraction, ids)

    return  (
                Thresholds(thresholds.lam, thresholds.lam_prime, shift + thresholds.shift),
                shifted - thresholds.shift
            )

"""# gradatim.selection.scores

Selection scores log p_F + γ H, tie separation & the positivity shift.
"""

__all__ =   [
                "score_shift",
                "selection_scores",
                "separate_ties",
            ]

from math                           import floor, inf, nextafter
from typing                         import List, Optional, Sequence

from numpy                          import arange, asarray, empty_like, float64, isfinite, lexsort, \
                                           ndarray

from gradatim.exceptions            import UsageError
from gradatim.selection.exceptions  import LengthMismatchError, NonFiniteScoresError


def selection_scores(
    log_likelihoods:    ndarray,
    entropies:          ndarray,
    gamma:              float
) -> ndarray:
    """# Selection Scores log p_Fi + γ H_i.

    ## Args:
        * log_likelihoods   (ndarray):  Forest log-likelihoods [N].
        * entropies         (ndarray):  Forest entropy bounds [N].
        * gamma             (float):    Entropy coefficient (>= 0).

    ## Raises:
        * LengthMismatchError:  If the arrays differ in length.
        * NonFiniteScoresError: If any score is not finite.

    ## Returns:
        * ndarray:  Scores [N].
    """
    ll: ndarray =   asarray(log_likelihoods, dtype = float64).reshape(-1)
    h:  ndarray =   asarray(entropies, dtype = float64).reshape(-1)

    if len(ll) != len(h): raise LengthMismatchError(first = len(ll), second = len(h))

    if gamma < 0: raise UsageError(f"Entropy coefficient must be >= 0, got {gamma}")

    scores: ndarray =   ll + gamma * h

    if not isfinite(scores).all(): raise NonFiniteScoresError(count = int((~isfinite(scores)).sum()))

    return scores


def separate_ties(
    scores: ndarray,
    ids:    Optional[Sequence[int]] =   None
) -> ndarray:
    """# Make the Score Order Strict.

    Samples are ranked by score (descending) then identifier (ascending); each score that does not 
    fall strictly below its predecessor in that ranking is lowered to the next representable value 
    beneath it. Already strict vectors are returned unchanged.

    ## Args:
        * scores    (ndarray):          Scores [N].
        * ids       (Sequence[int]):    Sample identifiers for tie-breaking. Defaults to positions.

    ## Returns:
        * ndarray:  Separated scores [N], in input order.
    """
    values: ndarray =       asarray(scores, dtype = float64).reshape(-1)
    keys:   ndarray =       arange(len(values)) if ids is None else asarray(ids)

    if len(keys) != len(values): raise LengthMismatchError(first = len(values), second = len(keys))

    order:  ndarray =       lexsort((keys, -values))
    ranked: List[float] =   values[order].tolist()

    for j in range(1, len(ranked)):
        if ranked[j] >= ranked[j - 1]: ranked[j] = nextafter(ranked[j - 1], -inf)

    separated:  ndarray =   empty_like(values)
    separated[order] =      ranked

    return separated


def score_shift(
    scores: ndarray
) -> float:
    """# Shift Making Every Score Strictly Negative.

    ## Returns:
        * float:    0 when all scores are already negative, otherwise floor(max) + 1.
    """
    top:    float = float(asarray(scores, dtype = float64).max())

    return 0.0 if top < 0 else floor(top) + 1.0

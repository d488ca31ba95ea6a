"""# gradatim.metrics.scores

Point-prediction metrics: mean absolute error & cumulative score.
"""

__all__ =   [
                "cumulative_score",
                "mae",
            ]


from numpy                          import abs as np_abs, asarray, float64, ndarray

from gradatim.exceptions            import UsageError
from gradatim.metrics.exceptions    import EmptyInputError, MetricLengthMismatchError


def _errors_(
    predictions:    ndarray,
    targets:        ndarray,
    metric:         str
) -> ndarray:
    """# Absolute Errors after Validation."""
    p:  ndarray =   asarray(predictions, dtype = float64).reshape(-1)
    t:  ndarray =   asarray(targets, dtype = float64).reshape(-1)

    if len(p) != len(t):    raise MetricLengthMismatchError(predictions = len(p), targets = len(t))
    if len(p) == 0:         raise EmptyInputError(metric = metric)

    return np_abs(p - t)


def mae(
    predictions:    ndarray,
    targets:        ndarray
) -> float:
    """# Mean Absolute Error Σ|ŷ_i − y_i| / N.

    ## Args:
        * predictions   (ndarray):  Predicted values [N].
        * targets       (ndarray):  Ground truth [N].

    ## Returns:
        * float:    Mean absolute error.
    """
    return float(_errors_(predictions, targets, "MAE").mean())


def cumulative_score(
    predictions:    ndarray,
    targets:        ndarray,
    level:          float
) -> float:
    """# Cumulative Score: Percentage of Predictions within ±L of the Target.

    An error exactly equal to L counts as inside.

    ## Args:
        * predictions   (ndarray):  Predicted values [N].
        * targets       (ndarray):  Ground truth [N].
        * level         (float):    Error level L (>= 0).

    ## Returns:
        * float:    Percentage in [0, 100].
    """
    if level < 0: raise UsageError(f"Error level must be >= 0, got {level}")

    return float(100.0 * (_errors_(predictions, targets, "CS") <= level).mean())

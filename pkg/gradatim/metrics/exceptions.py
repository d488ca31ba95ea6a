"""# gradatim.metrics.exceptions

Defines various exceptions pertaining to metric computation.
"""

__all__ =   [
                # Protocol
                "MetricError",

                # Concrete
                "EmptyInputError",
                "MetricLengthMismatchError",
            ]

from gradatim.exceptions    import UsageError

# PROTOCOL =========================================================================================

class MetricError(UsageError):
    """# Generic Metric Error.

    Base exception class for all metric-related errors.
    """
    pass

# CONCRETE =========================================================================================

class EmptyInputError(MetricError):
    """# Empty Input Error.

    Raised when a metric is requested over zero samples.
    """

    def __init__(self,
        metric: str
    ):
        """# Raise Empty Input Error.

        ## Args:
            * metric    (str):  Name of the metric.
        """
        super(EmptyInputError, self).__init__(f"""{metric} is undefined for empty input""")


class MetricLengthMismatchError(MetricError):
    """# Metric Length Mismatch Error.

    Raised when predictions and targets differ in length.
    """

    def __init__(self,
        predictions:    int,
        targets:        int
    ):
        """# Raise Metric Length Mismatch Error.

        ## Args:
            * predictions   (int):  Number of predictions.
            * targets       (int):  Number of targets.
        """
        super(MetricLengthMismatchError, self).__init__(
            f"""Got {predictions} predictions for {targets} targets"""
        )

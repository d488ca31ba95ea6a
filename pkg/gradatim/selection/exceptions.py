"""# gradatim.selection.exceptions

Defines various exceptions pertaining to sample selection.
"""

__all__ =   [
                # Protocol
                "SelectionError",

                # Concrete
                "EmptyScoresError",
                "EmptySelectionError",
                "InvalidThresholdsError",
                "LengthMismatchError",
                "NonFiniteScoresError",
                "PaceExhaustedError",
            ]

from gradatim.exceptions    import NumericError, SchedulingError, UsageError

# PROTOCOL =========================================================================================

class SelectionError(UsageError):
    """# Generic Selection Error.

    Base exception class for selection errors caused by invalid inputs.
    """
    pass

# CONCRETE =========================================================================================

class EmptyScoresError(SelectionError):
    """# Empty Scores Error.

    Raised when thresholds are calibrated against an empty score vector.
    """

    def __init__(self):
        """# Raise Empty Scores Error."""
        super(EmptyScoresError, self).__init__("""Cannot calibrate thresholds without scores""")


class LengthMismatchError(SelectionError):
    """# Length Mismatch Error.

    Raised when per-sample arrays disagree in length.
    """

    def __init__(self,
        first:  int,
        second: int
    ):
        """# Raise Length Mismatch Error.

        ## Args:
            * first     (int):  Length of the first array.
            * second    (int):  Length of the second array.
        """
        super(LengthMismatchError, self).__init__(
            f"""Per-sample arrays differ in length ({first} vs {second})"""
        )


class PaceExhaustedError(SelectionError):
    """# Pace Exhausted Error.

    Raised when the schedule is advanced past its final pace.
    """

    def __init__(self,
        pace_count: int
    ):
        """# Raise Pace Exhausted Error.

        ## Args:
            * pace_count    (int):  Number of configured paces.
        """
        super(PaceExhaustedError, self).__init__(
            f"""Schedule already reached its final pace ({pace_count})"""
        )


class EmptySelectionError(SchedulingError):
    """# Empty Selection Error.

    Raised when a threshold selects no sample at all.
    """

    def __init__(self):
        """# Raise Empty Selection Error."""
        super(EmptySelectionError, self).__init__(
            """No sample lies above the selection threshold; the soft band is undefined"""
        )


class NonFiniteScoresError(NumericError):
    """# Non-Finite Scores Error.

    Raised when selection scores contain NaN or infinite values.
    """

    def __init__(self,
        count:  int
    ):
        """# Raise Non-Finite Scores Error.

        ## Args:
            * count (int):  Number of non-finite scores.
        """
        super(NonFiniteScoresError, self).__init__(f"""{count} selection scores are not finite""")


class InvalidThresholdsError(SelectionError):
    """# Invalid Thresholds Error.

    Raised when selection thresholds violate λ > λ′ > 0.
    """

    def __init__(self,
        lam:        float,
        lam_prime:  float
    ):
        """# Raise Invalid Thresholds Error.

        ## Args:
            * lam       (float):    Outer threshold λ.
            * lam_prime (float):    Inner threshold λ′.
        """
        super(InvalidThresholdsError, self).__init__(
            f"""Thresholds must satisfy lambda > lambda_prime > 0 (got {lam!r}, {lam_prime!r})"""
        )

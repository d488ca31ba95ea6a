"""# gradatim.exceptions

Root exception categories shared by every sub-package.

The command line maps these categories onto exit codes: `UsageError` → 1, `NumericError` and 
`SchedulingError` → 2.
"""

__all__ =   [
                "GradatimError",
                "NumericError",
                "SchedulingError",
                "UsageError",
            ]


class GradatimError(Exception):
    """# Generic Gradatim Error.

    Base exception class for all package errors.
    """
    pass


class UsageError(GradatimError):
    """# Usage Error.

    Raised when an operation is called with inputs or configuration it cannot accept.
    """
    pass


class NumericError(GradatimError):
    """# Numeric Error.

    Raised when a computation produces or receives non-finite values.
    """
    pass


class SchedulingError(GradatimError):
    """# Scheduling Error.

    Raised when the self-paced schedule cannot produce a valid selection.
    """
    pass

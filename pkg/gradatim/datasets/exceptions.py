"""# gradatim.datasets.exceptions

Defines various exceptions pertaining to dataset operations.
"""

__all__ =   [
                # Protocol
                "DatasetError",

                # Concrete
                "DatasetParseError",
                "DuplicateSampleIdError",
                "InvalidSampleError",
            ]

from gradatim.exceptions    import UsageError

# PROTOCOL =========================================================================================

class DatasetError(UsageError):
    """# Generic Dataset Error.

    Base exception class for all dataset-related errors.
    """
    pass

# CONCRETE =========================================================================================

class DatasetParseError(DatasetError):
    """# Dataset Parse Error.

    Raised when a CSV file has a malformed header, a ragged row, or a non-numeric or non-finite 
    cell.
    """

    def __init__(self,
        line:   int,
        reason: str
    ):
        """# Raise Dataset Parse Error.

        ## Args:
            * line      (int):  1-based line number of the offending row (the header is line 1).
            * reason    (str):  What is wrong with the row.
        """
        # Retain the location for callers.
        self.line:  int =   line

        super(DatasetParseError, self).__init__(f"""line {line}: {reason}""")


class DuplicateSampleIdError(DatasetError):
    """# Duplicate Sample ID Error.

    Raised when two samples of one dataset share an identifier.
    """

    def __init__(self,
        sample_id:  int
    ):
        """# Raise Duplicate Sample ID Error.

        ## Args:
            * sample_id (int):  Repeated identifier.
        """
        super(DuplicateSampleIdError, self).__init__(f"""Sample id {sample_id} appears more than once""")


class InvalidSampleError(DatasetError):
    """# Invalid Sample Error.

    Raised when sample features or targets are non-finite or of inconsistent shape.
    """

    def __init__(self,
        reason: str
    ):
        """# Raise Invalid Sample Error.

        ## Args:
            * reason    (str):  Description of the problem.
        """
        super(InvalidSampleError, self).__init__(f"""Invalid sample: {reason}""")

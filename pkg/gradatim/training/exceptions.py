"""# gradatim.training.exceptions

Defines various exceptions pertaining to training.
"""

__all__ = ["DivergenceError"]

from gradatim.exceptions    import NumericError

class DivergenceError(NumericError):
    """# Divergence Error.

    Raised when the training loss explodes or the backbone parameters stop being finite.
    """

    def __init__(self,
        pace:   int,
        step:   int,
        loss:   float
    ):
        """# Raise Divergence Error.

        ## Args:
            * pace  (int):      Pace in which training diverged (0 for warmup).
            * step  (int):      Gradient step within the pace.
            * loss  (float):    Offending mean batch loss.
        """
        # Retain the location for callers.
        self.pace:  int =   pace
        self.step:  int =   step

        super(DivergenceError, self).__init__(
            f"""Training diverged at pace {pace}, step {step} (loss = {loss!r})"""
        )

"""# gradatim.backbone.exceptions

Defines various exceptions pertaining to feature backbone operations.
"""

__all__ =   [
                # Protocol
                "BackboneError",

                # Concrete
                "NonFiniteGradientError",
                "NonFiniteInputError",
                "NonFiniteParameterError",
                "ShapeMismatchError",
                "StaleCacheError",
            ]

from gradatim.exceptions    import NumericError, UsageError

# PROTOCOL =========================================================================================

class BackboneError(Exception):
    """# Generic Backbone Error.

    Base exception class for all backbone-related errors.
    """
    pass

# CONCRETE =========================================================================================

class ShapeMismatchError(BackboneError, UsageError):
    """# Shape Mismatch Error.

    Raised when inputs, layers, or gradients do not compose.
    """

    def __init__(self,
        what:       str,
        expected:   object,
        found:      object
    ):
        """# Raise Shape Mismatch Error.

        ## Args:
            * what      (str):      Entity whose shape was checked.
            * expected  (object):   Expected shape.
            * found     (object):   Shape found.
        """
        super(ShapeMismatchError, self).__init__(
            f"""{what}: expected shape {expected}, found {found}"""
        )


class NonFiniteInputError(BackboneError, UsageError):
    """# Non-Finite Input Error.

    Raised when a forward pass receives NaN or infinite inputs.
    """

    def __init__(self,
        count:  int
    ):
        """# Raise Non-Finite Input Error.

        ## Args:
            * count (int):  Number of non-finite input entries.
        """
        super(NonFiniteInputError, self).__init__(
            f"""Backbone input contains {count} non-finite value(s)"""
        )


class NonFiniteParameterError(BackboneError, UsageError):
    """# Non-Finite Parameter Error.

    Raised when backbone parameters are built or loaded with NaN or infinite entries.
    """

    def __init__(self,
        what:   str,
        count:  int
    ):
        """# Raise Non-Finite Parameter Error.

        ## Args:
            * what  (str):  Offending parameter, e.g. "layer 0 weight".
            * count (int):  Number of non-finite entries.
        """
        super(NonFiniteParameterError, self).__init__(
            f"""Backbone {what} contains {count} non-finite value(s)"""
        )


class StaleCacheError(BackboneError, UsageError):
    """# Stale Cache Error.

    Raised when a backward pass is attempted with a cache produced before the latest parameter 
    update.
    """

    def __init__(self,
        cache_version:  int,
        params_version: int
    ):
        """# Raise Stale Cache Error.

        ## Args:
            * cache_version     (int):  Parameter version the cache was produced with.
            * params_version    (int):  Current parameter version.
        """
        super(StaleCacheError, self).__init__(
            f"""Forward cache is stale (cache version {cache_version}, parameters version """
            f"""{params_version})"""
        )


class NonFiniteGradientError(BackboneError, NumericError):
    """# Non-Finite Gradient Error.

    Raised when a parameter update is attempted with NaN or infinite gradient entries. The 
    parameters are left untouched.
    """

    def __init__(self,
        layer:  int
    ):
        """# Raise Non-Finite Gradient Error.

        ## Args:
            * layer (int):  Index of the first layer with non-finite gradient entries.
        """
        super(NonFiniteGradientError, self).__init__(
            f"""Non-finite gradient in layer {layer}; update aborted"""
        )

"""# gradatim.configuration.exceptions

Defines various exceptions pertaining to configuration operations.
"""

__all__ =   [
                # Protocol
                "ConfigurationError",

                # Concrete
                "InvalidConfigValueError",
                "MalformedConfigError",
                "UnknownConfigKeyError",
            ]

from typing                 import Any

from gradatim.exceptions    import UsageError

# PROTOCOL =========================================================================================

class ConfigurationError(UsageError):
    """# Generic Configuration Error.

    Base exception class for all configuration-related errors.
    """
    pass

# CONCRETE =========================================================================================

class InvalidConfigValueError(ConfigurationError):
    """# Invalid Configuration Value Error.

    Raised when a configuration field holds a value of the wrong type or outside its range.
    """

    def __init__(self,
        key:    str,
        value:  Any,
        reason: str
    ):
        """# Raise Invalid Configuration Value Error.

        ## Args:
            * key       (str):  Dotted configuration key.
            * value     (Any):  Offending value.
            * reason    (str):  Constraint that was violated.
        """
        super(InvalidConfigValueError, self).__init__(
            f"""Invalid value for "{key}": {value!r} ({reason})"""
        )

        # Retain parts for re-raising under a parent prefix.
        self.key:       str =   key
        self.value:     Any =   value
        self.reason:    str =   reason

    def under(self,
        prefix: str
    ) -> "InvalidConfigValueError":
        """# Re-Key Under Parent Prefix.

        ## Args:
            * prefix    (str):  Dotted key of the enclosing section.

        ## Returns:
            * InvalidConfigValueError:  Equivalent error naming the full key.
        """
        return InvalidConfigValueError(f"{prefix}.{self.key}", self.value, self.reason)



class UnknownConfigKeyError(ConfigurationError):
    """# Unknown Configuration Key Error.

    Raised when a configuration document contains a key no configuration section defines.
    """

    def __init__(self,
        key:    str
    ):
        """# Raise Unknown Configuration Key Error.

        ## Args:
            * key   (str):  Dotted key that was not recognized.
        """
        super(UnknownConfigKeyError, self).__init__(f"""Unknown configuration key "{key}\"""")

        self.key:   str =   key


class MalformedConfigError(ConfigurationError):
    """# Malformed Configuration Error.

    Raised when a configuration document is not a JSON object.
    """

    def __init__(self,
        path:   str,
        reason: str
    ):
        """# Raise Malformed Configuration Error.

        ## Args:
            * path      (str):  Configuration file.
            * reason    (str):  Parser diagnostic.
        """
        super(MalformedConfigError, self).__init__(f"""{path}: {reason}""")

"""# gradatim.registration.exceptions

Defines various exceptions pertaining to command registration & dispatch.
"""

__all__ =   [
                # Protocol
                "RegistrationError",

                # Concrete
                "CommandNameMismatchError",
                "DuplicateCommandError",
                "InvalidExitCodeError",
                "UnknownCommandError",
            ]

from typing                 import Any

from gradatim.exceptions    import GradatimError, UsageError

# PROTOCOL =========================================================================================

class RegistrationError(GradatimError):
    """# Generic Registration Error."""
    pass

# CONCRETE =========================================================================================

class CommandNameMismatchError(RegistrationError):
    """# Command Name Mismatch Error.

    Raised when a command is registered under a name other than its argument configuration's;
    the parsed sub-command name would then never reach it.
    """

    def __init__(self,
        command_id: str,
        parser_id:  str
    ):
        super(CommandNameMismatchError, self).__init__(
            f"""Command "{command_id}" is configured with sub-command name "{parser_id}\""""
        )


class DuplicateCommandError(RegistrationError):
    """# Duplicate Command Error."""

    def __init__(self,
        command_id: str
    ):
        """# Raise Duplicate Command Error.

        ## Args:
            * command_id    (str):  Name registered twice.
        """
        super(DuplicateCommandError, self).__init__(
            f"""Command "{command_id}" is already registered"""
        )


class InvalidExitCodeError(RegistrationError):
    """# Invalid Exit Code Error.

    Raised when an entry point returns something other than an integer or None.
    """

    def __init__(self,
        command_id: str,
        code:       Any
    ):
        super(InvalidExitCodeError, self).__init__(
            f"""Command "{command_id}" returned {code!r}; expected an integer exit code"""
        )


class UnknownCommandError(RegistrationError, UsageError):
    """# Unknown Command Error."""

    def __init__(self,
        command_id: str,
        known:      list
    ):
        """# Raise Unknown Command Error.

        ## Args:
            * command_id    (str):          Name that was requested.
            * known         (List[str]):    Registered command names.
        """
        super(UnknownCommandError, self).__init__(
            f"""Unknown command "{command_id}" (choose from {", ".join(known)})"""
        )

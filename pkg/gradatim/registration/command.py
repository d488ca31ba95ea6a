"""# gradatim.registration.command

A registered sub-command: its name, argument configuration & main process.
"""

__all__ = ["Command"]

from argparse                           import ArgumentParser, _SubParsersAction
from dataclasses                        import dataclass
from typing                             import Any, Callable, Optional, Type

from gradatim.configuration             import CommandConfig
from gradatim.registration.exceptions   import CommandNameMismatchError, InvalidExitCodeError

@dataclass(frozen = True)
class Command:
    """# Registered Command.

    ## Attributes:
        * id            (str):                  Sub-command name.
        * config        (Type[CommandConfig]):  Argument configuration class.
        * entry_point   (Callable):             Main process; receives parsed arguments as keywords
                                                and returns an exit code (None meaning 0).
    """
    id:             str
    config:         Type[CommandConfig]
    entry_point:    Callable[..., Optional[int]]

    # METHODS ======================================================================================

    def add_parser(self,
        subparsers: _SubParsersAction
    ) -> ArgumentParser:
        """# Add the Command's Sub-Parser.

        ## Raises:
            * CommandNameMismatchError: If the configuration names a different sub-command.
        """
        config: CommandConfig = self.config()

        if config.parser_id != self.id:
            raise CommandNameMismatchError(command_id = self.id, parser_id = config.parser_id)

        return config.add_to(subparsers = subparsers)

    def run(self,
        **arguments:    Any
    ) -> int:
        """# Run the Main Process.

        ## Raises:
            * InvalidExitCodeError: If the entry point returns a non-integer.

        ## Returns:
            * int:  Exit code.
        """
        code:   Any =   self.entry_point(**arguments)

        if code is None: return 0

        if isinstance(code, bool) or not isinstance(code, int):
            raise InvalidExitCodeError(command_id = self.id, code = code)

        return code

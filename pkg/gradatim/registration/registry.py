"""# gradatim.registration.registry

Command registry. Commands register themselves when their modules are imported; the commands
package is walked the first time the registry is queried.
"""

__all__ = ["CommandRegistry"]

from argparse                           import _SubParsersAction
from importlib                          import import_module
from logging                            import Logger
from pkgutil                            import walk_packages
from types                              import ModuleType
from typing                             import Any, Dict, Iterator, List

from gradatim.registration.command      import Command
from gradatim.registration.exceptions   import DuplicateCommandError, UnknownCommandError
from gradatim.utilities                 import get_logger

class CommandRegistry:
    """# Command Registry"""

    def __init__(self,
        package:    str =   "gradatim.commands"
    ):
        """# Instantiate Command Registry.

        ## Args:
            * package   (str):  Dotted name of the package whose modules register commands.
        """
        # Initialize logger.
        self.__logger__:    Logger =                get_logger("commands-registry")

        # Define properties.
        self._package_:     str =                   package
        self._commands_:    Dict[str, Command] =    {}
        self._discovered_:  bool =                  False

    # PROPERTIES ===================================================================================

    @property
    def ids(self) -> List[str]:
        """# Registered Command Names, Sorted"""
        self._discover_()

        return sorted(self._commands_)

    # METHODS ======================================================================================

    def add(self,
        command:    Command
    ) -> None:
        """# Register a Command.

        ## Raises:
            * DuplicateCommandError:    If the name is taken.
        """
        if command.id in self._commands_: raise DuplicateCommandError(command_id = command.id)

        self.__logger__.debug(f"Registered {command.id}")

        self._commands_[command.id] = command

    def add_parsers(self,
        subparsers: _SubParsersAction
    ) -> None:
        """# Add Every Command's Sub-Parser, in Name Order."""
        for command_id in self.ids: self._commands_[command_id].add_parser(subparsers = subparsers)

    def dispatch(self,
        command_id: str,
        **arguments:    Any
    ) -> int:
        """# Run a Command with Parsed Arguments.

        ## Args:
            * command_id    (str):  Command to run.

        ## Returns:
            * int:  Exit code of the command.
        """
        command:    Command =   self.get(command_id)

        self.__logger__.debug(f"Dispatching {command_id}: {arguments}")

        return command.run(**arguments)

    def get(self,
        command_id: str
    ) -> Command:
        """# Look up a Registered Command.

        ## Raises:
            * UnknownCommandError:  If no command has that name.
        """
        self._discover_()

        if command_id not in self._commands_:
            raise UnknownCommandError(command_id = command_id, known = sorted(self._commands_))

        return self._commands_[command_id]

    # HELPERS ======================================================================================

    def _discover_(self) -> None:
        """# Import Every Module of the Commands Package, Once."""
        if self._discovered_: return

        # Set first; imported modules register through this registry.
        self._discovered_ = True

        package:    ModuleType =    import_module(self._package_)

        for _, module, _ in walk_packages(path = package.__path__, prefix = f"{self._package_}."):
            import_module(name = module)

    # DUNDERS ======================================================================================

    def __contains__(self,
        command_id: str
    ) -> bool:
        """# Command is Registered?"""
        return command_id in self.ids

    def __iter__(self) -> Iterator[Command]:
        """# Iterate Commands in Name Order."""
        return iter([self._commands_[command_id] for command_id in self.ids])

    def __len__(self) -> int:
        """# Number of Registered Commands"""
        return len(self.ids)

    def __repr__(self) -> str:
        """# Command Registry Object Representation"""
        return f"""<CommandRegistry({self._package_}, {len(self._commands_)} commands)>"""

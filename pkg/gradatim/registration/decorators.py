"""# gradatim.registration.decorators

Function annotation decorators for registration of commands.
"""

__all__ = ["register_command"]

from typing                         import Callable, Optional, Type

from gradatim.configuration         import CommandConfig
from gradatim.registration.command  import Command


def register_command(
    id:     str,
    config: Type[CommandConfig]
) -> Callable[[Callable[..., Optional[int]]], Callable[..., Optional[int]]]:
    """# Register Command.

    ## Args:
        * id        (str):                  Sub-command name; must match the configuration's.
        * config    (Type[CommandConfig]):  Command's argument configuration class.

    ## Returns:
        * Callable: Decorator returning the entry point unchanged.
    """
    def decorator(
        entry_point:    Callable[..., Optional[int]]
    ) -> Callable[..., Optional[int]]:
        # Imported late; command modules load while the registry discovers them.
        from gradatim.registration  import COMMAND_REGISTRY

        COMMAND_REGISTRY.add(Command(id = id, config = config, entry_point = entry_point))

        return entry_point

    return decorator

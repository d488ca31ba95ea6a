"""# gradatim.registration

Command registry: commands register themselves with `@register_command` and are discovered by 
walking `gradatim.commands`.
"""

__all__ =   [
                # Registry
                "COMMAND_REGISTRY",
                "Command",
                "CommandRegistry",

                # Decorators
                "register_command",

                # Exceptions
                "CommandNameMismatchError",
                "DuplicateCommandError",
                "InvalidExitCodeError",
                "RegistrationError",
                "UnknownCommandError",
            ]

from gradatim.registration.command      import Command
from gradatim.registration.decorators   import register_command
from gradatim.registration.exceptions   import *
from gradatim.registration.registry     import CommandRegistry

# Application-wide registry.
COMMAND_REGISTRY:   CommandRegistry =   CommandRegistry()

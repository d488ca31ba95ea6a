"""# gradatim.configuration

Argument configuration protocols & configuration errors.

The JSON run-configuration loader lives in `gradatim.configuration.run_config`; it is not 
re-exported here because it depends on every configurable sub-package.
"""

__all__ =   [
                # Protocol
                "Config",

                # Concrete
                "CommandConfig",

                # Exceptions
                "ConfigurationError",
                "InvalidConfigValueError",
                "MalformedConfigError",
                "UnknownConfigKeyError",
            ]

from gradatim.configuration.command_config  import CommandConfig
from gradatim.configuration.exceptions      import *
from gradatim.configuration.protocol        import Config

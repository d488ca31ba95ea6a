"""# gradatim.utilities

General package utilities.
"""

__all__ =   [
                # Logging
                "configure_logger",
                "get_logger",

                # System
                "make_generator",
                "spawn_generators",

                # Versioning
                "BANNER",
            ]

from gradatim.utilities.banner  import BANNER
from gradatim.utilities.logging import *
from gradatim.utilities.system  import *

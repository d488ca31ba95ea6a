"""# gradatim.commands.version.main

Main process entry point for version command.
"""

__all__ = ["version_entry_point"]

from gradatim.commands.version.__args__ import VersionConfig
from gradatim.registration              import register_command

@register_command(
    id =        "version",
    config =    VersionConfig
)
def version_entry_point(**kwargs) -> int:
    """# Display Package Version Information on Standard Error."""
    from sys                    import stderr

    from gradatim.utilities     import BANNER

    print(BANNER[1:], file = stderr)

    return 0

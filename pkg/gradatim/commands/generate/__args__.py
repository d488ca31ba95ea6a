"""# gradatim.commands.generate.args

Argument definitions for the generate command.
"""

__all__ = ["GenerateConfig"]

from argparse               import ArgumentParser
from typing                 import override

from gradatim.configuration import CommandConfig

class GenerateConfig(CommandConfig):
    """# Generate Command Configuration"""

    def __init__(self):
        """# Instantiate Generate Command Configuration."""
        super(GenerateConfig, self).__init__(
            name =  "generate",
            help =  """Generate the synthetic imbalanced regression benchmark as CSV."""
        )

    # HELPERS ======================================================================================

    @override
    def _define_arguments_(self,
        parser: ArgumentParser
    ) -> None:
        """# Define Parser Arguments."""
        parser.add_argument(
            "--spec",
            dest =      "spec",
            type =      str,
            default =   None,
            help =      """JSON benchmark specification (n, feature_dim, rare_mass, seed, ...). 
                        Defaults to the default benchmark."""
        )

        parser.add_argument(
            "--out",
            dest =      "out",
            type =      str,
            required =  True,
            help =      """Destination CSV file."""
        )

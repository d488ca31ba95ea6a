"""# gradatim.commands.evaluate.args

Argument definitions for the evaluate command.
"""

__all__ = ["EvaluateConfig"]

from argparse               import ArgumentParser
from typing                 import override

from gradatim.configuration import CommandConfig

class EvaluateConfig(CommandConfig):
    """# Evaluate Command Configuration"""

    def __init__(self):
        """# Instantiate Evaluate Command Configuration."""
        super(EvaluateConfig, self).__init__(
            name =  "evaluate",
            help =  """Evaluate a saved model on a CSV dataset; prints {"mae", "cs"} as JSON on 
                    standard output."""
        )

    # HELPERS ======================================================================================

    @override
    def _define_arguments_(self,
        parser: ArgumentParser
    ) -> None:
        """# Define Parser Arguments."""
        parser.add_argument(
            "--model",
            dest =      "model",
            type =      str,
            required =  True,
            help =      """Model file written by the train command."""
        )

        parser.add_argument(
            "--data",
            dest =      "data",
            type =      str,
            required =  True,
            help =      """CSV dataset with header id,y,x0,...,x{D-1}."""
        )

        parser.add_argument(
            "--cs-level",
            dest =      "cs_level",
            type =      float,
            default =   5.0,
            help =      """Error level L of the cumulative score. Defaults to 5."""
        )

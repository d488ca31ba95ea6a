"""# gradatim.commands.train.args

Argument definitions for the train command.
"""

__all__ = ["TrainCommandConfig"]

from argparse               import ArgumentParser
from typing                 import override

from gradatim.configuration import CommandConfig

class TrainCommandConfig(CommandConfig):
    """# Train Command Configuration"""

    def __init__(self):
        """# Instantiate Train Command Configuration."""
        super(TrainCommandConfig, self).__init__(
            name =  "train",
            help =  """Train a forest; writes model.json, trace.csv, entropy_bins.csv and 
                    summary.json to the output directory."""
        )

    # HELPERS ======================================================================================

    @override
    def _define_arguments_(self,
        parser: ArgumentParser
    ) -> None:
        """# Define Parser Arguments."""
        self._add_config_argument_(parser)
        self._add_out_dir_argument_(parser)
        self._add_progress_argument_(parser)

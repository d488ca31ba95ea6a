"""# gradatim.commands.ablate.args

Argument definitions for the ablate command.
"""

__all__ = ["AblateConfig"]

from argparse               import ArgumentParser
from typing                 import override

from gradatim.configuration import CommandConfig

class AblateConfig(CommandConfig):
    """# Ablate Command Configuration"""

    def __init__(self):
        """# Instantiate Ablate Command Configuration."""
        super(AblateConfig, self).__init__(
            name =  "ablate",
            help =  """Train the DRF, SP-DRF and SPUDRF arms under shared seeds and write the 
                    comparison table (arm, test_mae, test_cs, rare_region_mae)."""
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

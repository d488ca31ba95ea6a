"""# gradatim.commands.train.main

Main process entry point for train command.
"""

__all__ = ["train_entry_point"]

from typing                             import Optional

from gradatim.commands.train.__args__   import TrainCommandConfig
from gradatim.registration              import register_command

@register_command(
    id =        "train",
    config =    TrainCommandConfig
)
def train_entry_point(
    out_dir:    str,
    config:     Optional[str] = None,
    progress:   bool =          True,
    **kwargs
) -> int:
    """# Train a Forest from a Run Configuration.

    ## Args:
        * out_dir   (str):  Output directory.
        * config    (str):  JSON run configuration; None uses every default.
        * progress  (bool): Show progress bars. Defaults to True.

    ## Returns:
        * int:  Exit code.
    """
    from gradatim.configuration.run_config  import load_run_config
    from gradatim.training.experiment       import run_training

    run_training(load_run_config(config), out_dir, progress = progress)

    return 0

"""# gradatim.commands.ablate.main

Main process entry point for ablate command.
"""

__all__ = ["ablate_entry_point"]

from typing                             import Optional

from gradatim.commands.ablate.__args__  import AblateConfig
from gradatim.registration              import register_command

@register_command(
    id =        "ablate",
    config =    AblateConfig
)
def ablate_entry_point(
    out_dir:    str,
    config:     Optional[str] = None,
    progress:   bool =          True,
    **kwargs
) -> int:
    """# Run the Three-Arm Ablation.

    ## Args:
        * out_dir   (str):  Output directory; one sub-directory per arm (and seed).
        * config    (str):  JSON run configuration; None uses every default.
        * progress  (bool): Show progress bars. Defaults to True.

    ## Returns:
        * int:  Exit code.
    """
    from gradatim.configuration.run_config  import load_run_config
    from gradatim.training.experiment       import run_ablation

    run_ablation(load_run_config(config), out_dir, progress = progress)

    return 0

"""# gradatim.configuration.command_config

Command configuration & shared argument definitions.
"""

__all__ = ["CommandConfig"]

from argparse                           import ArgumentParser

from gradatim.configuration.protocol    import Config

class CommandConfig(Config):
    """# Command Configuration & Argument Handler"""

    def __init__(self,
        name:   str,
        help:   str
    ):
        """# Instantiate Command Configuration.

        ## Args:
            * name  (str):  Command identifier.
            * help  (str):  Description of command's purpose.
        """
        super(CommandConfig, self).__init__(parser_id = name, parser_help = help)

    # HELPERS ======================================================================================

    @staticmethod
    def _add_config_argument_(
        parser: ArgumentParser
    ) -> None:
        """# Define `--config`."""
        parser.add_argument(
            "--config",
            dest =      "config",
            type =      str,
            default =   None,
            help =      """JSON run configuration. Every field is optional; omitted fields take 
                        their defaults."""
        )

    @staticmethod
    def _add_out_dir_argument_(
        parser: ArgumentParser
    ) -> None:
        """# Define `--out-dir`."""
        parser.add_argument(
            "--out-dir",
            dest =      "out_dir",
            type =      str,
            required =  True,
            help =      """Directory receiving every artifact of the run."""
        )

    @staticmethod
    def _add_progress_argument_(
        parser: ArgumentParser
    ) -> None:
        """# Define `--no-progress`."""
        parser.add_argument(
            "--no-progress",
            dest =      "progress",
            action =    "store_false",
            help =      """Hide progress bars."""
        )

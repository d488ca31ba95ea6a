"""# gradatim.configuration.protocol

Abstract command-line argument configuration.
"""

__all__ = ["Config"]

from abc                import ABC, abstractmethod
from argparse           import ArgumentParser, _SubParsersAction

class Config(ABC):
    """# Abstract Argument Configuration"""

    def __init__(self,
        parser_id:      str,
        parser_help:    str
    ):
        """# Instantiate Configuration.

        ## Args:
            * parser_id     (str):  Sub-command name.
            * parser_help   (str):  Sub-command description.
        """
        self._parser_id_:   str =   parser_id
        self._parser_help_: str =   parser_help

    # PROPERTIES ===================================================================================

    @property
    def parser_help(self) -> str:
        """# Sub-Command Description"""
        return self._parser_help_

    @property
    def parser_id(self) -> str:
        """# Sub-Command Name"""
        return self._parser_id_

    # METHODS ======================================================================================

    def add_to(self,
        subparsers: _SubParsersAction
    ) -> ArgumentParser:
        """# Add this Configuration as a Sub-Command.

        ## Args:
            * subparsers    (_SubParsersAction):    Sub-parser group of the application parser.

        ## Returns:
            * ArgumentParser:   Sub-command parser, with its arguments defined.
        """
        parser: ArgumentParser =    subparsers.add_parser(
                                        name =          self._parser_id_,
                                        help =          self._parser_help_,
                                        description =   self._parser_help_
                                    )

        self._define_arguments_(parser = parser)

        return parser

    # HELPERS ======================================================================================

    @abstractmethod
    def _define_arguments_(self,
        parser: ArgumentParser
    ) -> None:
        """# Define Parser Arguments.

        ## Args:
            * parser    (ArgumentParser):   Parser to whom arguments will be attributed.
        """
        pass

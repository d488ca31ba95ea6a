"""# gradatim.main

Primary application process.

Exit codes: 0 on success; 1 on usage errors (bad flags, unreadable files, invalid configuration); 
2 on numeric or scheduling failures and anything unexpected.
"""

__all__ = ["gradatim_entry_point", "run"]

from argparse   import Namespace
from logging    import Logger
from typing     import Optional, Sequence

def run(
    argv:   Optional[Sequence[str]] =   None
) -> int:
    """# Execute a gradatim Command.

    ## Args:
        * argv  (Sequence[str] | None): Command-line arguments, without the program name. Defaults 
                                        to system arguments.

    ## Returns:
        * int:  Exit code.
    """
    # Package imports.
    from gradatim.__args__      import parse_gradatim_arguments
    from gradatim.exceptions    import GradatimError, UsageError
    from gradatim.registration  import COMMAND_REGISTRY
    from gradatim.utilities     import configure_logger

    try:# Parse arguments; argparse exits on bad flags & on --help.
        arguments:  Namespace = parse_gradatim_arguments(argv)

    except SystemExit as e: return 0 if e.code in (0, None) else 1

    # Initialize logger.
    logger:     Logger =    configure_logger(
                                logging_level = arguments.logging_level,
                                logging_path =  arguments.logging_path
                            )

    logger.debug(f"Gradatim arguments: {vars(arguments)}")

    if arguments.gradatim_command is None:
        logger.error("No command given (see gradatim --help)"); return 1

    try:# Dispatch to command.
        return COMMAND_REGISTRY.dispatch(command_id = arguments.gradatim_command, **vars(arguments))

    except UsageError as e:
        logger.error(str(e)); return 1

    except OSError as e:
        logger.error(f"{e.filename or ''}: {e.strerror or e}".lstrip(": ")); return 1

    except GradatimError as e:
        logger.error(str(e)); return 2

    # Catch wildcard errors.
    except Exception as e:
        logger.critical(f"Unexpected error: {e!r}")
        logger.debug("Traceback:", exc_info = True)
        return 2

    finally:
        logger.debug("Exiting...")


def gradatim_entry_point() -> int:
    """# Console Script Entry Point."""
    return run()


if __name__ == "__main__": raise SystemExit(gradatim_entry_point())

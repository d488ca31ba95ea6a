"""# gradatim.utilities.logging

Package logging utility.
"""

__all__ =   [
                "configure_logger",
                "get_logger"
            ]

from logging            import getLogger, Formatter, Handler, Logger, StreamHandler
from logging.handlers   import RotatingFileHandler
from os                 import makedirs
from sys                import stderr
from typing             import Optional


# Declare base logger.
LOGGER: Logger = getLogger(name = "gradatim")


def configure_logger(
    logging_level:  str =           "INFO",
    logging_path:   Optional[str] = None
) -> Logger:
    """# Configure Logging Utility.

    Console output goes to standard error; standard output is reserved for machine-readable 
    command results.

    ## Args:
        * logging_level (str):          Minimum logging level (DEBUG < INFO < WARNING < ERROR < 
                                        CRITICAL). Defaults to "INFO".
        * logging_path  (str | None):   Directory at which logs will be written. When None, no log 
                                        file is written. Defaults to None.

    ## Returns:
        * Logger:   Base package logger after configuration.
    """
    # Declare global logger.
    global LOGGER

    # Set logging level.
    LOGGER.setLevel(level = logging_level)

    # Drop handlers from any previous configuration.
    for handler in list(LOGGER.handlers): LOGGER.removeHandler(hdlr = handler)

    # Define console handler.
    stderr_handler: StreamHandler =         StreamHandler(stream = stderr)
    stderr_handler.setFormatter(fmt = Formatter(fmt = "%(levelname)s | %(name)s | %(message)s"))
    LOGGER.addHandler(hdlr = stderr_handler)

    # If a logging path was requested...
    if logging_path is not None:

        # Ensure logging path exists.
        makedirs(name = logging_path, exist_ok = True)

        # Define file handler.
        file_handler:   Handler =   RotatingFileHandler(
                                        filename =      f"{logging_path}/gradatim.log",
                                        maxBytes =      1048576,
                                        backupCount =   10
                                    )
        file_handler.setFormatter(
            fmt = Formatter(fmt = "%(asctime)s | %(levelname)s | %(name)s | %(message)s")
        )
        LOGGER.addHandler(hdlr = file_handler)

    # Return logger object.
    return LOGGER


def get_logger(
    logger_name:    str
) -> Logger:
    """# Get Child Logger.

    ## Args:
        * logger_name   (str):  Name attributed to child logger.

    ## Returns:
        * Logger:   New child logger.
    """
    # Declare global logger.
    global LOGGER

    # Create new child logger.
    return LOGGER.getChild(suffix = logger_name)

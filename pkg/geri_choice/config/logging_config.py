import logging
import sys

from geri_choice.config.settings import LoggingConfig, Paths


def setup_logger(name="geri_choice"):
    """
    Configures and returns a logger instance for the application.

    The logger writes to a file (execution.log) and to the standard error
    stream, keeping standard output free for command results. The logs
    directory is created first.

    Args:
        name (str, optional): The name of the logger. Defaults to "geri_choice".

    Returns:
        logging.Logger: A configured logger instance ready for use.
    """
    if not Paths.LOGS.exists():
        Paths.LOGS.mkdir(parents=True)

    logger = logging.getLogger(name)
    logger.setLevel(getattr(logging, LoggingConfig.LEVEL, logging.INFO))

    if logger.handlers:
        return logger

    formatter = logging.Formatter(
        LoggingConfig.FORMAT, datefmt=LoggingConfig.DATE_FORMAT
    )

    file_handler = logging.FileHandler(Paths.LOGS / "execution.log", encoding="utf-8")
    file_handler.setFormatter(formatter)
    logger.addHandler(file_handler)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    return logger


log = setup_logger()

"""Utility module for handling exceptions thrown in commands."""
import logging

from seqrsp.util.exceptions import ConfigurationError, SeqRspError, ValidationError

logger = logging.getLogger(__name__)

EXIT_FAILURE = 1
EXIT_USAGE = 2


class ExceptionHandler:
    """Utility class for handling exceptions thrown in commands."""

    # pylint: disable=too-few-public-methods

    @staticmethod
    def handle(command: str, error: Exception) -> int:
        """
        Handle an exception thrown in a command by logging an error message.

        :param command: Name of the command the exception is thrown from.
        :param error: The exception.
        :return: Exit code the process should terminate with.
        """
        if isinstance(error, (ValidationError, ConfigurationError)):
            detail = str(error)
            if isinstance(error, ValidationError) and error.index is not None:
                detail = "{} (field {}, index {})".format(detail, error.field, error.index)
            logger.error("ERROR: Could not finish command %s: %s", command, detail)
            return EXIT_USAGE
        if isinstance(error, SeqRspError):
            logger.error("ERROR: Could not finish command %s: %s", command, error)
            return EXIT_FAILURE
        if isinstance(error, OSError):
            detail = error.strerror or str(error)
            if error.filename:
                detail = "{} ({})".format(detail, error.filename)
            logger.error("ERROR: Could not finish command %s: %s", command, detail)
            return EXIT_FAILURE
        logger.exception("ERROR: Unexpected failure in command %s.", command)
        return EXIT_FAILURE

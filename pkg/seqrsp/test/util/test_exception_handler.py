"""Class which tests the ExceptionHandler util class."""
import logging

from seqrsp.util.exception_handler import EXIT_FAILURE, EXIT_USAGE, ExceptionHandler
from seqrsp.util.exceptions import ConfigurationError, ProtocolError, ValidationError


class TestExceptionHandler:
    """Class which tests the ExceptionHandler util class."""

    def test_validation_error(self, caplog):
        """Test that a validation error gives the usage exit code and names the offending index."""
        with caplog.at_level(logging.ERROR):
            code = ExceptionHandler.handle("cascade", ValidationError("lambda out of range.", "lambdas", 2))
        assert code == EXIT_USAGE
        assert "ERROR: Could not finish command cascade" in caplog.text
        assert "index 2" in caplog.text

    def test_configuration_error(self):
        """Test that a configuration error gives the usage exit code."""
        assert ExceptionHandler.handle("table", ConfigurationError("bad")) == EXIT_USAGE

    def test_protocol_error(self, caplog):
        """Test that other library errors give the failure exit code."""
        with caplog.at_level(logging.ERROR):
            code = ExceptionHandler.handle("cascade", ProtocolError("chain too long"))
        assert code == EXIT_FAILURE
        assert "chain too long" in caplog.text

    def test_os_error(self, caplog):
        """Test that a file system error is reported in one line, without a traceback."""
        with caplog.at_level(logging.ERROR):
            error = FileNotFoundError(2, "No such file or directory", "/missing/out.csv")
            code = ExceptionHandler.handle("table", error)
        assert code == EXIT_FAILURE
        assert "ERROR: Could not finish command table: No such file or directory (/missing/out.csv)" in caplog.text
        assert "Unexpected failure" not in caplog.text
        assert all(record.exc_info is None for record in caplog.records)

    def test_unexpected_error(self, caplog):
        """Test that an unexpected exception is logged with its traceback."""
        with caplog.at_level(logging.ERROR):
            code = ExceptionHandler.handle("resources", RuntimeError("boom"))
        assert code == EXIT_FAILURE
        assert "Unexpected failure in command resources" in caplog.text

    def test_validation_error_is_value_error(self):
        """Test that ValidationError can be caught as ValueError."""
        error = ValidationError("x", "theta")
        assert isinstance(error, ValueError)
        assert error.field == "theta" and error.index is None

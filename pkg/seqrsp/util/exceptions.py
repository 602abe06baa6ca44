"""Exception types raised by the simulator."""
from typing import Optional


class SeqRspError(Exception):
    """Base class of every error raised by seqrsp."""


class DimensionError(SeqRspError):
    """A matrix or vector does not have the expected shape."""


class NotHermitianError(SeqRspError):
    """An operator which should be Hermitian is not."""


class PSDViolationError(SeqRspError):
    """An operator which should be positive semi-definite has a negative eigenvalue."""


class UndefinedConditionalStateError(SeqRspError):
    """The outcome which should condition a state has (numerically) zero probability."""


class ProtocolError(SeqRspError):
    """The protocol is asked for something it does not define, e.g. a Bob beyond the chain."""


class ConfigurationError(SeqRspError):
    """An option or environment variable holds an unusable value."""


class ValidationError(SeqRspError, ValueError):
    """A parameter is outside its allowed range."""

    def __init__(self, message: str, field: str, index: Optional[int] = None):
        """
        Create a validation error.

        :param message: Human readable description.
        :param field: Name of the offending parameter.
        :param index: Position of the offending element when the parameter is a sequence.
        """
        super().__init__(message)
        self.field = field
        self.index = index

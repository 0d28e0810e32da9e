

import sys
from src.logger import logging


def error_message_detail(error, error_detail: sys):
    """
    Generate detailed error message with file name and line number.

    Args:
        error: The error object
        error_detail: sys module to extract exception info

    Returns:
        str: Formatted error message
    """
    _, _, exc_tb = error_detail.exc_info()
    if exc_tb is None:
        return f"Error occurred: {str(error)}"

    # Report the innermost frame, where the error was actually raised
    while exc_tb.tb_next is not None:
        exc_tb = exc_tb.tb_next
    file_name = exc_tb.tb_frame.f_code.co_filename
    line_number = exc_tb.tb_lineno

    error_message = f"Error occurred in script: [{file_name}] at line [{line_number}]: {str(error)}"

    return error_message


class CustomException(Exception):
    """
    Custom exception class that logs detailed error information.

    The wrapped error is kept on ``original`` so callers can dispatch on
    the rejection type (see ``GraphEngineError`` below).

    Usage:
        try:
            # some code
        except Exception as e:
            raise CustomException(e, sys)
    """

    def __init__(self, error_message, error_detail: sys):
        """
        Initialize custom exception.

        Args:
            error_message: The original error (or message)
            error_detail: sys module to extract exception info
        """
        if isinstance(error_message, CustomException):
            # Already wrapped further down the call stack
            super().__init__(str(error_message.original))
            self.original = error_message.original
            self.error_message = error_message.error_message
            return

        super().__init__(str(error_message))
        self.original = error_message
        self.error_message = error_message_detail(error_message, error_detail)

        # Log the error
        logging.error(self.error_message)

    @property
    def field(self) -> str:
        """Name of the offending input field, when the rejection carries one"""
        return getattr(self.original, "field", "input")

    def __str__(self):
        """Return the detailed error message"""
        return self.error_message


class GraphEngineError(ValueError):
    """Base class for every rejection the engine raises on bad input."""

    field = "input"

    def __init__(self, message: str, field: str = None):
        super().__init__(message)
        if field is not None:
            self.field = field


class LoopEdgeError(GraphEngineError):
    field = "edges"


class VertexRangeError(GraphEngineError):
    field = "edges"


class InvalidVertexError(GraphEngineError):
    field = "vertex"


class DisconnectedGraphError(GraphEngineError):
    field = "graph"


class GraphOrderError(GraphEngineError):
    field = "n"


class ConnectivityDomainError(GraphEngineError):
    field = "k"


class MalformedRotationError(GraphEngineError):
    field = "rotation"


class ClassPreconditionError(GraphEngineError):
    field = "class"


class InadmissibleSpecError(GraphEngineError):
    field = "family"


class BoundDomainError(GraphEngineError):
    field = "bound"


class EnumerationRangeError(GraphEngineError):
    field = "n"


class Graph6FormatError(GraphEngineError):
    field = "graph6"


class CheckpointError(GraphEngineError):
    field = "resume"


class UsageError(GraphEngineError):
    field = "usage"


if __name__ == "__main__":
    try:
        logging.info("Testing custom exception...")
        raise LoopEdgeError("loop edge (2, 2)")
    except Exception as e:
        logging.info("Exception caught, raising CustomException...")
        raise CustomException(e, sys)

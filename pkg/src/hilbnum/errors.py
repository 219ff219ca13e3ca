"""Exception types raised across the package."""


class HilbnumError(Exception):
    """Base class for all package errors."""


class NotDivisible(HilbnumError, ValueError):
    pass


class CapExceeded(HilbnumError, ValueError):
    """A coefficient was requested above the series' degree cap."""


class ArithmeticOverflow(HilbnumError, OverflowError):
    """A checked 64-bit quantity left its range."""


class StreamDegreeMismatch(HilbnumError, ValueError):
    pass


class ClassOutOfRange(HilbnumError, ValueError):
    pass


class ParseError(HilbnumError, ValueError):
    """Malformed text input; carries 1-based line and column when known."""

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)

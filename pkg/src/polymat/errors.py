"""Exception hierarchy shared by every polymat module."""


class PolymatError(Exception):
    pass


class DimensionMismatch(PolymatError, ValueError):
    pass


class UnitIdealError(PolymatError, ValueError):
    """Raised when an operation would produce the unit ideal (1)."""


class ZeroIdealError(PolymatError, ValueError):
    pass


class NotPolymatroidalError(PolymatError, ValueError):
    pass


class BudgetExceeded(PolymatError):
    """A computation would exceed its configured size bound."""

    def __init__(self, what: str, size: int, limit: int):
        super().__init__(f"{what}: size {size} exceeds budget {limit}")
        self.what = what
        self.size = size
        self.limit = limit


class ParseError(PolymatError, ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class NoLinearQuotients(PolymatError, ValueError):
    """The ideal has no linear quotients in the requested order."""

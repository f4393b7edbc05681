"""Exception hierarchy shared by the whole package."""


class FolcremonaError(Exception):
    """Base class for every error raised by folcremona."""


class ConductorMismatch(FolcremonaError, ValueError):
    """Two operands live in different cyclotomic fields."""


class NotDivisible(FolcremonaError, ArithmeticError):
    """Exact division requested but the remainder is nonzero."""


class DegenerateInput(FolcremonaError, ValueError):
    """A mathematical precondition of an operation is violated."""


class ExtensionRequired(FolcremonaError):
    """A square root lies outside the configured cyclotomic field."""

    def __init__(self, value, message=None):
        self.value = value
        super().__init__(message or f"sqrt({value}) is not in the field; enlarge the conductor")


class ParseError(FolcremonaError, ValueError):
    """Syntax error in an expression, with the offending position."""

    def __init__(self, message, position=None, text=None):
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)

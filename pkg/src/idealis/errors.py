"""Exception hierarchy shared by every idealis module."""


class IdealisError(Exception):
    """Base class for all errors raised by idealis."""


class StructuralError(IdealisError, ValueError):
    """Operands live over different variable sets, or a value is malformed."""


class SquarefreeError(IdealisError, ValueError):
    """A squarefree-only operation received a non-squarefree generator."""


class ExponentOverflowError(IdealisError, OverflowError):
    """An exponent left the supported machine-width range."""


class DomainError(IdealisError, ValueError):
    """Input violates an operation's precondition (e.g. zero or unit ideal)."""


class LoopError(DomainError):
    """Coloring was asked of a hypergraph that has a singleton edge."""


class ResourceLimitError(IdealisError, RuntimeError):
    """A configured size guard was exceeded.

    ``bound`` names the guard, ``flag`` says how to raise it.
    """

    def __init__(self, message, bound=None, flag=None):
        if flag:
            message = f"{message} (raise with {flag})"
        super().__init__(message)
        self.bound = bound
        self.flag = flag


class ParseError(IdealisError, ValueError):
    """Text input could not be parsed; carries a 1-based line and column."""

    def __init__(self, message, line=1, column=1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column

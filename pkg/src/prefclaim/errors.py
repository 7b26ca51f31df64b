"""Exception types shared across the package."""


class PrefClaimError(Exception):
    """Base class for all errors raised by prefclaim."""


class MalformedInputError(PrefClaimError, ValueError):
    """A framework, extension or formula refers to unknown or duplicate atoms."""


class PreconditionError(PrefClaimError, ValueError):
    """An operation was called on input violating its documented precondition."""


class UnsupportedReductionError(PrefClaimError, ValueError):
    """The requested reduction is not covered by the called procedure."""


class ResourceLimitError(PrefClaimError, RuntimeError):
    """A configured size cap would be exceeded."""


class SearchBudgetExceeded(PrefClaimError, RuntimeError):
    """A bounded search ran out of budget before reaching a verdict.

    This is an *inconclusive* outcome and must not be read as "no solution".
    """

    def __init__(self, nodes):
        super().__init__(f"search budget exhausted after {nodes} nodes; result inconclusive")
        self.nodes = nodes


class ParseError(PrefClaimError, ValueError):
    """Syntax or semantic error in an input file, with a source position."""

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)

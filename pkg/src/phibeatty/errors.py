"""Exception types shared across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """An argument lies outside an operation's stated domain."""


class EnumerationBudgetError(RuntimeError):
    """A bounded quantifier would need to enumerate more points than allowed."""


class UnboundVariableError(ValueError):
    """A formula mentions a variable with no binding in scope."""


class BoxShapeError(ValueError):
    """A formula does not have the interval-plus-fractional-band shape.

    Raised by the fast decision path to signal that the caller should fall
    back to enumeration; it does not indicate a malformed formula.
    """


class FormulaSyntaxError(ValueError):
    """A formula string failed to parse.

    Carries the character offset plus the derived line and column so callers
    can point at the offending spot.
    """

    def __init__(self, message: str, text: str, offset: int):
        self.offset = offset
        prefix = text[:offset]
        self.line = prefix.count("\n") + 1
        self.column = offset - (prefix.rfind("\n") + 1) + 1
        super().__init__(
            f"{message} at offset {offset} (line {self.line}, column {self.column})"
        )

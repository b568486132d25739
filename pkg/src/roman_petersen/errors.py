"""Exception types shared across the toolkit."""


class RomanPetersenError(Exception):
    """Base class for every toolkit error."""


class ParameterError(RomanPetersenError, ValueError):
    """A parameter lies outside the domain an operation is defined on."""


class BudgetError(RomanPetersenError):
    """A request exceeds a solver's enumeration budget."""


class SchemaError(RomanPetersenError, ValueError):
    """A serialized document does not match the expected schema."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.reason = message


class InvalidAssignmentError(RomanPetersenError, ValueError):
    """An assignment violates an operation's precondition."""


class InternalCheckError(RomanPetersenError):
    """An internal invariant failed; this is a bug, never user error."""

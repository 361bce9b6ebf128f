"""Exception types shared across the package."""


class ContractViolation(ValueError):
    """An operation was called with arguments outside its precondition."""


class DimacsParseError(ValueError):
    """Malformed DIMACS input. The message names the offending line."""

    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class UnknownGraphError(ValueError):
    """A name outside the named-graph catalog was requested."""


class WitnessError(ValueError):
    """A planarity or minor witness failed independent validation."""


class SearchInconclusive(RuntimeError):
    """The minor search ran out of budget before reaching a verdict."""

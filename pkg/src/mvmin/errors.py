"""Exception hierarchy shared by every module of the package."""


class ModelError(Exception):
    """Base class for all errors raised by mvmin."""


class StructuralError(ModelError):
    """A name, edge or state does not fit the regulatory graph."""


class DomainError(ModelError):
    """Arguments are well formed but outside the operation's domain."""


class ContractError(ModelError):
    """An operation's input precondition does not hold."""


class CapacityError(ModelError):
    """An explicit enumeration would exceed a configured cap."""

    def __init__(self, cap: str, limit: int, requested: int):
        self.cap = cap
        self.limit = limit
        self.requested = requested
        super().__init__(f"{cap} exceeded: {requested} > {limit}")


class ParseError(ModelError):
    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"{line}:{column}: {message}")

class RainbowError(Exception):
    """Base class for errors raised by this package."""


class ParseError(RainbowError, ValueError):
    def __init__(self, message: str, *, line: int | None = None, offset: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.line = line
        self.offset = offset


class GraphValidationError(RainbowError, ValueError):
    """Self-loop, duplicate edge, or endpoint out of range."""


class DomainError(RainbowError, ValueError):
    """An input outside the operation's mathematical domain."""


class ResourceError(RainbowError, RuntimeError):
    """A size guard was exceeded."""

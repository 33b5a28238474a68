"""Exception types shared across the simulator."""


class DomainError(ValueError):
    """An input violates an operation's physical or numerical domain."""


class PartitionOverflowError(DomainError):
    """Requested data + sensing subcarriers exceed the total available."""


class ConfigError(ValueError):
    """A configuration document or override cannot be parsed.

    ``line`` carries the 1-based line number when the error comes from a
    config file; it is None for command-line overrides.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)

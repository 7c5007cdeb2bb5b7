"""Shared exception types."""


class ParameterError(ValueError):
    """An argument is outside an operation's documented domain."""


class RankError(ValueError):
    """A generator matrix does not have the rank its caller required."""


class CapacityError(RuntimeError):
    """An exact computation would exceed the configured budget."""


class ParseError(ValueError):
    """A text artifact (generator matrix / block family file) is malformed."""

    def __init__(self, message, line=None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")

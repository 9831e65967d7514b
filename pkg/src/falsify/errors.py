"""Exception types shared across the package."""


class ParseError(ValueError):
    """Raised on malformed specification text, with source position."""

    def __init__(self, message, line, column):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class EvaluationError(ValueError):
    """Raised when a formula references a variable the signal does not carry."""


class SimulationError(RuntimeError):
    """Raised when a simulation produces a non-finite state.

    ``time`` is the integration time at which the blow-up was detected.
    """

    def __init__(self, message, time):
        super().__init__(f"{message} (at t={time:g})")
        self.time = time


class PlayoutError(RuntimeError):
    """Raised when every objective evaluation inside a playout failed."""

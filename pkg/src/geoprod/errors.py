"""Exception hierarchy shared by every geoprod module."""


class GeoprodError(Exception):
    """Base class for all errors raised by geoprod."""


class OutOfRange(GeoprodError, IndexError):
    pass


class SelfLoop(GeoprodError, ValueError):
    pass


class Disconnected(GeoprodError, ValueError):
    pass


class BadParams(GeoprodError, ValueError):
    pass


class Unsupported(GeoprodError, ValueError):
    pass


class Overflow(GeoprodError, ValueError):
    pass


class EmptySet(GeoprodError, ValueError):
    pass


class TooSmall(GeoprodError, ValueError):
    pass


class FormulaViolation(GeoprodError, AssertionError):
    """A proven identity failed; this always indicates a bug."""


class OrientationError(GeoprodError):
    """Neither factor order satisfies the diameter/radius hypothesis."""

    def __init__(self, message: str, report=None) -> None:
        super().__init__(message)
        self.report = report


class HypothesisFails(GeoprodError):
    def __init__(self, message: str, report=None) -> None:
        super().__init__(message)
        self.report = report


class TimeLimit(GeoprodError):
    """Raised when an exact search exceeds its time budget.

    ``best`` carries the best known (non-optimal) result, if any.
    """

    def __init__(self, message: str, best=None) -> None:
        super().__init__(message)
        self.best = best


class ParseError(GeoprodError, ValueError):
    def __init__(self, message: str, text: str = "", position: int = 0, expected=()) -> None:
        self.text = text
        self.position = position
        self.expected = tuple(expected)
        detail = message
        if expected:
            detail += f"; expected one of: {', '.join(self.expected)}"
        if text:
            detail += f"\n  {text}\n  {' ' * position}^"
        super().__init__(detail)


class InvalidWitness(GeoprodError, AssertionError):
    """A result record carried a witness that does not verify."""

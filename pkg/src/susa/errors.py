"""Exception hierarchy shared by the arithmetic engine, solvers and CLI.

The CLI prints ``<ClassName>: <message>`` for every ``SusaError``, so the
class names double as the documented error prefixes.
"""


class SusaError(Exception):
    """Base class for every domain error raised by the package."""


class NotationError(SusaError, ValueError):
    """A sexagesimal or decimal literal could not be read.

    ``offset`` is the 0-based character position of the offending text.
    """

    def __init__(self, message, offset=None, text=None):
        super().__init__(message)
        self.offset = offset
        self.text = text

    def __str__(self):
        msg = super().__str__()
        if self.offset is not None:
            return f"{msg} (at offset {self.offset})"
        return msg

    def shifted(self, delta):
        """Return a copy whose offset is moved by ``delta`` characters."""
        offset = None if self.offset is None else self.offset + delta
        return type(self)(self.args[0], offset, self.text)


class MalformedDigit(NotationError):
    pass


class NotationSyntaxError(NotationError):
    pass


class ZeroInput(SusaError, ValueError):
    pass


class DivisionByZero(SusaError, ZeroDivisionError):
    pass


class NegativeInput(SusaError, ValueError):
    pass


class DomainError(SusaError, ValueError):
    pass


class InvalidParams(SusaError, ValueError):
    pass


class NoSolution(SusaError, ValueError):
    pass


class NotExactlySolvable(SusaError, ValueError):
    """An exact square root was required but the radicand is not a rational square."""


class NoRealChord(SusaError, ValueError):
    pass


class AmbiguousQuery(SusaError, ValueError):
    pass


class TraceMismatch(SusaError):
    """A recorded step does not reproduce its stored result."""


class EmptyRange(UserWarning):
    """Issued (not raised) when an enumeration bound admits no triples."""

class GaussCodeError(ValueError):
    """Base class for invalid Gauss-code text or diagram data."""


class MalformedToken(GaussCodeError):
    pass


class DuplicateRole(GaussCodeError):
    pass


class SignMismatch(GaussCodeError):
    pass


class DanglingChord(GaussCodeError):
    pass


class TooManyCircles(GaussCodeError):
    pass


class UnknownChord(KeyError):
    pass


class NotOneComponent(ValueError):
    pass


class NoSuchConfiguration(ValueError):
    pass


class CircleCountMismatch(ValueError):
    pass


class ParseError(ValueError):
    """A fixture-table line could not be read; carries the 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class InvalidCode(ParseError):
    pass

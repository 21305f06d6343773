class TrTimexError(Exception):
    """Base class for all errors raised by trtimex."""


class LexiconError(TrTimexError):
    """A lexicon file could not be loaded."""

    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)


class InputError(TrTimexError, ValueError):
    """Input text is not valid UTF-8."""


class GoldParseError(TrTimexError, ValueError):
    """An inline TIMEX3 document is malformed."""

    def __init__(self, message, offset):
        self.offset = offset
        super().__init__(f"offset {offset}: {message}")


class DefectError(TrTimexError, AssertionError):
    """An internal invariant was violated (a bug, not bad input)."""

from __future__ import annotations


class GlossError(Exception):
    """Base class for load/parse failures in msa_gloss."""


class SourceError(GlossError):
    """A problem in an input file, located by path and (optionally) line."""

    def __init__(self, message: str, path: str | None = None, line: int | None = None):
        self.message = message
        self.path = path
        self.line = line
        super().__init__(str(self))

    def __str__(self) -> str:
        where = self.path or "<input>"
        if self.line is not None:
            where = f"{where}:{self.line}"
        return f"{where}: {self.message}"


class LexiconError(SourceError):
    pass


class RuleSetError(SourceError):
    pass


class GoldParseError(SourceError):
    pass


class UsageError(ValueError):
    """An API precondition was violated by the caller."""

"""Shared parse-error type carrying source position."""

from __future__ import annotations


class ParseError(ValueError):
    """Syntax or resolution error in an RDF or query document."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        loc = ""
        if line is not None:
            loc = f" at line {line}"
            if column is not None:
                loc += f", column {column}"
        super().__init__(message + loc)

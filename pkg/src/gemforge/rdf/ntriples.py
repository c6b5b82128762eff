"""Line-oriented N-Triples parser.

One triple per line, absolute IRIs only, no prefixes, no shorthand. Kept
separate from the Turtle parser because N-Triples is strict where Turtle is
permissive: a bare word or relative IRI is an error here, never sugar.
"""

from __future__ import annotations

from gemforge.rdf.errors import ParseError
from gemforge.rdf.graph import Graph
from gemforge.rdf.terms import BlankNode, Iri, Literal, Term, Triple

_ESCAPES = {
    "t": "\t",
    "b": "\b",
    "n": "\n",
    "r": "\r",
    "f": "\f",
    '"': '"',
    "\\": "\\",
}


class _Line:
    def __init__(self, text: str, line_no: int):
        self.text = text
        self.pos = 0
        self.line_no = line_no

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.line_no, self.pos + 1)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def skip_ws(self) -> None:
        while self.peek() in (" ", "\t"):
            self.pos += 1

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def iri(self) -> Iri:
        if self.peek() != "<":
            raise self.error("expected '<'")
        self.pos += 1
        out = []
        while True:
            if self.at_end():
                raise self.error("unterminated IRI")
            ch = self.text[self.pos]
            if ch == ">":
                self.pos += 1
                break
            if ch == "\\":
                out.append(self._uchar())
                continue
            self.pos += 1
            out.append(ch)
        value = "".join(out)
        try:
            return Iri(value)
        except ValueError as exc:
            raise self.error(str(exc)) from None

    def _uchar(self) -> str:
        self.pos += 1  # backslash
        kind = self.peek()
        width = {"u": 4, "U": 8}.get(kind)
        if width is None:
            raise self.error(f"bad escape \\{kind} in IRI")
        self.pos += 1
        hexs = self.text[self.pos : self.pos + width]
        if len(hexs) != width:
            raise self.error("truncated unicode escape")
        self.pos += width
        try:
            return chr(int(hexs, 16))
        except ValueError:
            raise self.error(f"bad unicode escape {hexs!r}") from None

    def blank(self) -> BlankNode:
        if not self.text.startswith("_:", self.pos):
            raise self.error("expected '_:'")
        self.pos += 2
        start = self.pos
        while self.peek().isalnum() or self.peek() == "_":
            self.pos += 1
        label = self.text[start : self.pos]
        if not label:
            raise self.error("blank node label expected after _:")
        return BlankNode(label)

    def literal(self) -> Literal:
        if self.peek() != '"':
            raise self.error("expected '\"'")
        self.pos += 1
        out = []
        while True:
            if self.at_end():
                raise self.error("unterminated literal")
            ch = self.text[self.pos]
            if ch == '"':
                self.pos += 1
                break
            if ch == "\\":
                self.pos += 1
                esc = self.peek()
                if esc in _ESCAPES:
                    self.pos += 1
                    out.append(_ESCAPES[esc])
                elif esc in ("u", "U"):
                    self.pos -= 1
                    out.append(self._uchar())
                else:
                    raise self.error(f"bad string escape \\{esc}")
                continue
            self.pos += 1
            out.append(ch)
        lexical = "".join(out)
        if self.peek() == "@":
            self.pos += 1
            start = self.pos
            while self.peek().isalnum() or self.peek() == "-":
                self.pos += 1
            tag = self.text[start : self.pos]
            if not tag:
                raise self.error("empty language tag")
            return Literal(lexical, lang=tag)
        if self.text.startswith("^^", self.pos):
            self.pos += 2
            dt = self.iri()
            try:
                return Literal(lexical, dt)
            except ValueError as exc:
                raise self.error(str(exc)) from None
        return Literal(lexical)


def parse_ntriples(text: str) -> Graph:
    """Parse an N-Triples document. Blank node labels are kept verbatim."""
    graph = Graph()
    for line_no, raw in enumerate(text.split("\n"), start=1):
        line = _Line(raw, line_no)
        line.skip_ws()
        if line.at_end() or line.peek() == "#":
            continue

        ch = line.peek()
        if ch == "<":
            subject = line.iri()
        elif ch == "_":
            subject = line.blank()
        else:
            raise line.error(f"expected IRI or blank node subject, found {ch!r}")

        line.skip_ws()
        predicate = line.iri()

        line.skip_ws()
        ch = line.peek()
        obj: Term
        if ch == "<":
            obj = line.iri()
        elif ch == "_":
            obj = line.blank()
        elif ch == '"':
            obj = line.literal()
        else:
            raise line.error(f"expected IRI, blank node or literal object, found {ch!r}")

        line.skip_ws()
        if line.peek() != ".":
            raise line.error("expected '.' at end of triple")
        line.pos += 1
        line.skip_ws()
        if not line.at_end() and line.peek() != "#":
            raise line.error("trailing content after '.'")

        graph.add(Triple(subject, predicate, obj))
    return graph

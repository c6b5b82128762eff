"""Core RDF data model: IRIs, literals, blank nodes and triples.

Terms are immutable value objects; equality and hashing follow RDF term
equality (IRI string, lexical form + datatype + language tag, blank label).
Every term knows its N-Triples rendering via ``n3()``, which doubles as the
canonical sort key throughout the package.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

_SCHEME = re.compile(r"^[A-Za-z][A-Za-z0-9+.\-]*:")
_BLANK_LABEL = re.compile(r"^[A-Za-z0-9_]+$")
_LANG_TAG = re.compile(r"^[A-Za-z]{1,8}(-[A-Za-z0-9]{1,8})*$")

# Characters never allowed in an IRI (RFC 3987 exclusions we enforce).
_IRI_FORBIDDEN = set('<>"{}|^`\\')


def _escape_literal(s: str) -> str:
    out = []
    for ch in s:
        if ch == "\\":
            out.append("\\\\")
        elif ch == '"':
            out.append('\\"')
        elif ch == "\n":
            out.append("\\n")
        elif ch == "\r":
            out.append("\\r")
        elif ch == "\t":
            out.append("\\t")
        elif ord(ch) < 0x20 or ord(ch) == 0x7F:
            out.append("\\u%04X" % ord(ch))
        else:
            out.append(ch)
    return "".join(out)


@dataclass(frozen=True)
class Iri:
    """An absolute IRI. Requires a scheme and rejects spoiler characters."""

    value: str

    def __post_init__(self) -> None:
        v = self.value
        if not isinstance(v, str) or not v:
            raise ValueError("IRI must be a nonempty string")
        if not _SCHEME.match(v):
            raise ValueError(f"IRI has no scheme: {v!r}")
        for ch in v:
            if ch.isspace() or ch in _IRI_FORBIDDEN:
                raise ValueError(f"forbidden character {ch!r} in IRI {v!r}")

    def n3(self) -> str:
        return f"<{self.value}>"

    def __str__(self) -> str:
        return self.value


# Constants the rdf subpackage itself depends on; the full vocabulary lives
# in gemforge.namespaces, which re-exports these.
RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
XSD_NS = "http://www.w3.org/2001/XMLSchema#"

XSD_STRING = Iri(XSD_NS + "string")
XSD_INTEGER = Iri(XSD_NS + "integer")
XSD_DECIMAL = Iri(XSD_NS + "decimal")
XSD_DOUBLE = Iri(XSD_NS + "double")
XSD_BOOLEAN = Iri(XSD_NS + "boolean")
RDF_LANGSTRING = Iri(RDF_NS + "langString")
RDF_TYPE = Iri(RDF_NS + "type")


@dataclass(frozen=True)
class Literal:
    """An RDF literal: lexical form, datatype, optional language tag.

    A language tag forces the datatype to rdf:langString (filled in
    automatically when the datatype is left at its default); conversely
    rdf:langString without a tag is rejected.
    """

    lexical: str
    datatype: Iri = XSD_STRING
    lang: str | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.lexical, str):
            raise ValueError("literal lexical form must be a string")
        if self.lang is not None:
            if not _LANG_TAG.match(self.lang):
                raise ValueError(f"malformed language tag {self.lang!r}")
            if self.datatype == XSD_STRING:
                object.__setattr__(self, "datatype", RDF_LANGSTRING)
            elif self.datatype != RDF_LANGSTRING:
                raise ValueError("language-tagged literal must use rdf:langString")
        elif self.datatype == RDF_LANGSTRING:
            raise ValueError("rdf:langString literal requires a language tag")

    def n3(self) -> str:
        quoted = f'"{_escape_literal(self.lexical)}"'
        if self.lang is not None:
            return f"{quoted}@{self.lang}"
        if self.datatype != XSD_STRING:
            return f"{quoted}^^{self.datatype.n3()}"
        return quoted

    def __str__(self) -> str:
        return self.lexical


@dataclass(frozen=True)
class BlankNode:
    """A blank node with a graph-local label."""

    label: str

    def __post_init__(self) -> None:
        if not _BLANK_LABEL.match(self.label):
            raise ValueError(f"bad blank node label {self.label!r}")

    def n3(self) -> str:
        return f"_:{self.label}"

    def __str__(self) -> str:
        return f"_:{self.label}"


Term = Union[Iri, BlankNode, Literal]
Subject = Union[Iri, BlankNode]


@dataclass(frozen=True)
class Triple:
    """One RDF statement. The predicate is always an IRI."""

    subject: Subject
    predicate: Iri
    object: Term

    def __post_init__(self) -> None:
        if not isinstance(self.subject, (Iri, BlankNode)):
            raise ValueError("triple subject must be an IRI or blank node")
        if not isinstance(self.predicate, Iri):
            raise ValueError("triple predicate must be an IRI")
        if not isinstance(self.object, (Iri, BlankNode, Literal)):
            raise ValueError("triple object must be an RDF term")

    def n3(self) -> str:
        return f"{self.subject.n3()} {self.predicate.n3()} {self.object.n3()} ."

    def sort_key(self) -> tuple[str, str, str]:
        return (self.subject.n3(), self.predicate.n3(), self.object.n3())

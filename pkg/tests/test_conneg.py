import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gemforge.rdf.conneg import (
    EXTENSIONS,
    FORMAT_BY_EXTENSION,
    MEDIA_TYPES,
    RESOURCE_MEDIA,
    SELECT_MEDIA,
    Format,
    NotAcceptable,
    negotiate,
    negotiate_media,
)


class TestSpecifiedCases:
    def test_rdfxml_exact(self):
        assert negotiate("application/rdf+xml") == Format.RDFXML

    def test_empty_header_defaults_to_html(self):
        assert negotiate("") == Format.HTML

    def test_qvalue_comparison(self):
        assert negotiate("text/html;q=0.3, text/turtle;q=0.9") == Format.TURTLE

    def test_full_wildcard_prefers_turtle(self):
        assert negotiate("*/*") == Format.TURTLE

    def test_legacy_n3_alias(self):
        fmt, media = negotiate_media("text/rdf+n3", RESOURCE_MEDIA, Format.HTML)
        assert fmt == Format.TURTLE
        assert media == "text/rdf+n3"


class TestTieBreaks:
    def test_equal_q_uses_preference_order(self):
        assert (
            negotiate("application/ld+json, application/rdf+xml") == Format.RDFXML
        )
        assert negotiate("application/n-triples, application/ld+json") == Format.JSONLD

    def test_specificity_beats_wildcard_for_q(self):
        # text/* gives turtle 0.2; exact html 0.9 wins
        assert negotiate("text/*;q=0.2, text/html;q=0.9") == Format.HTML

    def test_explicit_zero_refuses_format_despite_alias(self):
        assert negotiate("text/turtle;q=0, */*;q=0.1") == Format.RDFXML


class TestContextTables:
    def test_application_xml_is_rdfxml_on_resources(self):
        fmt, media = negotiate_media("application/xml", RESOURCE_MEDIA, Format.HTML)
        assert (fmt, media) == (Format.RDFXML, "application/xml")

    def test_application_xml_is_results_on_select(self):
        fmt, media = negotiate_media(
            "application/xml", SELECT_MEDIA, Format.SPARQL_JSON
        )
        assert (fmt, media) == (Format.SPARQL_XML, "application/xml")

    def test_application_json_split(self):
        assert negotiate_media("application/json", RESOURCE_MEDIA, Format.HTML)[0] == Format.JSONLD
        assert (
            negotiate_media("application/json", SELECT_MEDIA, Format.SPARQL_JSON)[0]
            == Format.SPARQL_JSON
        )


class TestFailureModes:
    def test_unsupported_type_raises(self):
        with pytest.raises(NotAcceptable):
            negotiate("image/png")

    def test_garbage_header_falls_back_to_default(self):
        assert negotiate("garbage") == Format.HTML
        assert negotiate(";;;,,q=") == Format.HTML

    def test_all_zero_q_raises(self):
        with pytest.raises(NotAcceptable):
            negotiate("text/turtle;q=0")

    @settings(max_examples=200, deadline=None)
    @given(st.text(max_size=80))
    def test_total_on_arbitrary_headers(self, header):
        try:
            fmt = negotiate(header)
        except NotAcceptable:
            return
        assert isinstance(fmt, Format)


class TestTables:
    def test_every_format_has_one_canonical_media_type(self):
        assert set(MEDIA_TYPES) == set(Format)
        assert len(set(MEDIA_TYPES.values())) == len(MEDIA_TYPES)

    def test_extension_map_is_bijective(self):
        assert {FORMAT_BY_EXTENSION[e] for e in FORMAT_BY_EXTENSION} == set(EXTENSIONS)

    def test_media_type_strings(self):
        assert MEDIA_TYPES[Format.TURTLE] == "text/turtle"
        assert MEDIA_TYPES[Format.NTRIPLES] == "application/n-triples"
        assert MEDIA_TYPES[Format.RDFXML] == "application/rdf+xml"
        assert MEDIA_TYPES[Format.JSONLD] == "application/ld+json"
        assert MEDIA_TYPES[Format.SPARQL_JSON] == "application/json"
        assert MEDIA_TYPES[Format.SPARQL_XML] == "application/xml"
        assert MEDIA_TYPES[Format.HTML] == "text/html"

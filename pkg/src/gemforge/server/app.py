"""HTTP service: dereferenceable resource URIs, the query endpoint, the
ontology, and the JSON API the explorer consumes.

Responses for resource URIs negotiate directly and point at the chosen
variant with Content-Location rather than 303-redirecting; one round
trip instead of two, at the cost of deviating from the httpRange-14
redirect pattern. The `output` query parameter on /sparql overrides the
Accept header. All handlers read one immutable snapshot per request;
/admin/reload builds a fresh snapshot and swaps it in atomically.
"""

from __future__ import annotations

import urllib.parse
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, Request, Response
from fastapi.responses import HTMLResponse, JSONResponse, PlainTextResponse
from fastapi.staticfiles import StaticFiles

from gemforge.namespaces import (
    GEO_LAT,
    GEO_LONG,
    OWL_SAMEAS,
    RDF_TYPE,
    RDFS_COMMENT,
)
from gemforge.rdf.conneg import (
    EXTENSIONS,
    FORMAT_BY_EXTENSION,
    Format,
    MEDIA_TYPES,
    NotAcceptable,
    RESOURCE_MEDIA,
    SELECT_MEDIA,
    negotiate_media,
)
from gemforge.rdf.errors import ParseError
from gemforge.rdf.serialize import serialize
from gemforge.rdf.terms import BlankNode, Iri, Literal
from gemforge.server import html as pages
from gemforge.server.render import (
    FormatMismatch,
    body_for,
    execute_query,
    format_for_token,
)
from gemforge.server.state import ServerState, Snapshot
from gemforge.sparql import describe

ARC_CAP = 200

# The ontology document itself is served in the two syntaxes it ships
# in, plus a browsable index.
ONTOLOGY_DOC_MEDIA: dict[str, Format] = {
    "text/turtle": Format.TURTLE,
    "text/rdf+n3": Format.TURTLE,
    "application/rdf+xml": Format.RDFXML,
    "application/xml": Format.RDFXML,
    "text/html": Format.HTML,
}

EXAMPLE_QUERY = """PREFIX cg: <https://culturalgems.jrc.ec.europa.eu/ontology/cultural-gems/>
PREFIX rdfs: <http://www.w3.org/2000/01/rdf-schema#>
SELECT ?gem ?name WHERE {
  ?gem a cg:Museum ;
       rdfs:label ?name .
}
LIMIT 10"""


def _not_acceptable(supported) -> PlainTextResponse:
    return PlainTextResponse(
        "not acceptable; supported: " + ", ".join(sorted(supported)) + "\n",
        status_code=406,
    )


def _bad_request(message: str) -> HTMLResponse:
    return HTMLResponse(pages.error_page(400, message), status_code=400)


def _split_extension(path: str) -> tuple[str, Optional[Format]]:
    base, dot, ext = path.rpartition(".")
    if dot and "/" not in ext and ext in FORMAT_BY_EXTENSION:
        return base, FORMAT_BY_EXTENSION[ext]
    return path, None


def _resource_404(snap: Snapshot, iri_text: str, accept: str) -> Response:
    message = f"no data about {iri_text}"
    try:
        fmt, _ = negotiate_media(accept, RESOURCE_MEDIA, Format.HTML)
    except NotAcceptable:
        fmt = Format.HTML
    if fmt == Format.HTML:
        return HTMLResponse(pages.error_page(404, message), status_code=404)
    return PlainTextResponse(
        f"# {message}\n", status_code=404, media_type="text/turtle"
    )


async def _query_params(request: Request) -> dict[str, str]:
    """Merge the URL query string with an urlencoded POST body; the body
    wins on duplicates. Parsed by hand to avoid a multipart dependency."""
    params = {k: v for k, v in request.query_params.items()}
    if request.method == "POST":
        content_type = request.headers.get("content-type", "")
        body = await request.body()
        if content_type.split(";")[0].strip() == "application/x-www-form-urlencoded":
            parsed = urllib.parse.parse_qs(
                body.decode("utf-8", "replace"), keep_blank_values=True
            )
            for key, values in parsed.items():
                params[key] = values[0]
        elif content_type.split(";")[0].strip() == "application/sparql-query":
            params["query"] = body.decode("utf-8", "replace")
    return params


def create_app(state: ServerState, explorer_dir: Optional[str] = None) -> FastAPI:
    app = FastAPI(openapi_url=None, docs_url=None, redoc_url=None)
    config = state.snapshot.config

    if config.cors_allowed_origins:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(
            CORSMiddleware,
            allow_origins=list(config.cors_allowed_origins),
            allow_methods=["GET", "POST"],
            allow_headers=["*"],
        )

    def ns(snap: Snapshot) -> tuple[str, str]:
        return snap.config.base_resource_ns, snap.config.base_ontology_ns

    @app.get("/healthz")
    def healthz() -> JSONResponse:
        snap = state.snapshot
        return JSONResponse(
            {"status": "ok", "triples": snap.data.count()}
        )

    @app.get("/")
    def index() -> HTMLResponse:
        return HTMLResponse(pages.sparql_page(EXAMPLE_QUERY))

    @app.get("/resource/{rest:path}")
    def resource(rest: str, request: Request) -> Response:
        snap = state.snapshot
        resource_ns, ontology_ns = ns(snap)
        accept = request.headers.get("accept", "")
        path, forced = _split_extension(rest)
        if not path:
            return _resource_404(snap, resource_ns, accept)
        try:
            iri = Iri(resource_ns + path)
        except ValueError:
            return _resource_404(snap, resource_ns + path, accept)
        description = describe(snap.data, iri)
        if description.count() == 0:
            return _resource_404(snap, iri.value, accept)
        if forced is not None:
            fmt, media = forced, MEDIA_TYPES[forced]
        else:
            try:
                fmt, media = negotiate_media(accept, RESOURCE_MEDIA, Format.HTML)
            except NotAcceptable:
                return _not_acceptable(RESOURCE_MEDIA)
        if fmt == Format.HTML:
            body = pages.resource_page(
                iri,
                snap.label_of(iri),
                description,
                snap.sameas_of(iri),
                resource_ns,
                ontology_ns,
            )
        else:
            body = serialize(description, fmt)
        return Response(
            content=body,
            media_type=media,
            headers={
                "Content-Location": f"/resource/{path}.{EXTENSIONS[fmt]}",
                "Vary": "Accept",
            },
        )

    @app.get("/sparql")
    @app.post("/sparql")
    async def sparql(request: Request) -> Response:
        snap = state.snapshot
        resource_ns, ontology_ns = ns(snap)
        params = await _query_params(request)
        query_text = params.get("query")
        if query_text is None or not query_text.strip():
            return _bad_request("missing required parameter: query")
        try:
            outcome = execute_query(query_text, snap.data)
        except ParseError as exc:
            return _bad_request(str(exc))
        token = params.get("output")
        if token is not None:
            try:
                fmt = format_for_token(token, outcome)
            except FormatMismatch as exc:
                return _bad_request(str(exc))
            media = token
        else:
            table = RESOURCE_MEDIA if outcome.graph is not None else SELECT_MEDIA
            default = (
                Format.TURTLE if outcome.graph is not None else Format.SPARQL_JSON
            )
            try:
                fmt, media = negotiate_media(
                    request.headers.get("accept", ""), table, default
                )
            except NotAcceptable:
                return _not_acceptable(table)
        try:
            body = body_for(outcome, fmt, resource_ns, ontology_ns)
        except FormatMismatch as exc:
            return _bad_request(str(exc))
        return Response(content=body, media_type=media, headers={"Vary": "Accept"})

    @app.get("/ontology/{rest:path}")
    def ontology(rest: str, request: Request) -> Response:
        snap = state.snapshot
        resource_ns, ontology_ns = ns(snap)
        accept = request.headers.get("accept", "")

        if rest in ("", "cultural-gems", "cultural-gems/"):
            try:
                fmt, media = negotiate_media(
                    accept, ONTOLOGY_DOC_MEDIA, Format.TURTLE
                )
            except NotAcceptable:
                return _not_acceptable(ONTOLOGY_DOC_MEDIA)
            if fmt == Format.TURTLE:
                body = snap.ontology_text
            elif fmt == Format.RDFXML:
                body = serialize(snap.ontology_graph, fmt)
            else:
                body = pages.ontology_index(
                    sorted(
                        (
                            (c, snap.label_of(c))
                            for c in snap.model.classes
                            if c.value.startswith(ontology_ns)
                        ),
                        key=lambda pair: pair[0].value,
                    ),
                    resource_ns,
                    ontology_ns,
                )
            return Response(content=body, media_type=media, headers={"Vary": "Accept"})

        prefix = "cultural-gems/"
        if not rest.startswith(prefix):
            return HTMLResponse(
                pages.error_page(404, f"unknown ontology path {rest!r}"),
                status_code=404,
            )
        local = rest[len(prefix) :]
        try:
            iri = Iri(ontology_ns + local)
        except ValueError:
            return HTMLResponse(
                pages.error_page(404, f"unknown ontology path {rest!r}"),
                status_code=404,
            )
        is_class = iri in snap.model.classes
        is_property = iri in snap.model.properties
        if not is_class and not is_property:
            return HTMLResponse(
                pages.error_page(404, f"no class or property named {local!r}"),
                status_code=404,
            )
        try:
            fmt, media = negotiate_media(accept, RESOURCE_MEDIA, Format.HTML)
        except NotAcceptable:
            return _not_acceptable(RESOURCE_MEDIA)
        if fmt != Format.HTML:
            body = serialize(describe(snap.ontology_graph, iri), fmt)
        elif is_class:
            comment = snap.ontology_graph.value(iri, RDFS_COMMENT)
            body = pages.class_page(
                iri,
                snap.label_of(iri),
                comment.lexical if isinstance(comment, Literal) else None,
                snap.model.direct_parents(iri),
                snap.model.direct_children(iri),
                snap.instance_count(iri),
                resource_ns,
                ontology_ns,
            )
        else:
            body = pages.property_page(
                iri,
                snap.label_of(iri),
                list(snap.ontology_graph.match(iri, None, None)),
                resource_ns,
                ontology_ns,
            )
        return Response(content=body, media_type=media, headers={"Vary": "Accept"})

    @app.get("/api/node")
    def api_node(request: Request) -> JSONResponse:
        snap = state.snapshot
        iri_text = request.query_params.get("iri")
        direction = request.query_params.get("dir", "both")
        if not iri_text:
            return JSONResponse(
                {"error": "missing required parameter: iri"}, status_code=400
            )
        if direction not in ("out", "in", "both"):
            return JSONResponse(
                {"error": f"dir must be out, in, or both, got {direction!r}"},
                status_code=400,
            )
        try:
            iri = Iri(iri_text)
        except ValueError as exc:
            return JSONResponse({"error": str(exc)}, status_code=400)

        has_out = any(True for _ in snap.data.match(iri, None, None))
        has_in = any(True for _ in snap.data.match(None, None, iri))
        if not has_out and not has_in:
            return JSONResponse(
                {"error": f"unknown resource {iri.value}"}, status_code=404
            )

        out_arcs: list[dict] = []
        if direction in ("out", "both"):
            seen = set()
            for t in snap.data.match(iri, None, None):
                if t.predicate in (RDF_TYPE, OWL_SAMEAS):
                    continue
                obj = t.object
                if isinstance(obj, Iri):
                    entry = (t.predicate.value, obj.value, "iri")
                elif isinstance(obj, BlankNode):
                    entry = (t.predicate.value, f"_:{obj.label}", "bnode")
                else:
                    entry = (t.predicate.value, obj.lexical, "literal")
                seen.add(entry)
            out_arcs = [
                {"p": p, "o": o, "o_kind": kind}
                for p, o, kind in sorted(seen, key=lambda e: (e[0], e[2], e[1]))
            ]

        in_arcs: list[dict] = []
        if direction in ("in", "both"):
            seen = set()
            for t in snap.data.match(None, None, iri):
                if t.predicate == OWL_SAMEAS:
                    continue
                subj = t.subject
                text = (
                    subj.value if isinstance(subj, Iri) else f"_:{subj.label}"
                )
                seen.add((text, t.predicate.value))
            in_arcs = [
                {"s": s, "p": p} for s, p in sorted(seen)
            ]

        truncated = len(out_arcs) > ARC_CAP or len(in_arcs) > ARC_CAP
        geo = None
        lat = snap.data.value(iri, GEO_LAT)
        lon = snap.data.value(iri, GEO_LONG)
        if isinstance(lat, Literal) and isinstance(lon, Literal):
            try:
                geo = {"lat": float(lat.lexical), "lon": float(lon.lexical)}
            except ValueError:
                geo = None

        document = {
            "iri": iri.value,
            "label": snap.label_of(iri),
            "types": [t.value for t in snap.types_of(iri)],
            "out": out_arcs[:ARC_CAP],
            "in": in_arcs[:ARC_CAP],
            "sameAs": [p.value for p in snap.sameas_of(iri)],
            "truncated": truncated,
        }
        if geo is not None:
            document["geo"] = geo
        return JSONResponse(document)

    @app.post("/admin/reload")
    def reload(request: Request) -> JSONResponse:
        client = request.client
        if client is not None and client.host not in ("127.0.0.1", "::1", "localhost"):
            return JSONResponse(
                {"error": "reload is restricted to localhost"}, status_code=403
            )
        try:
            fresh = state.reload()
        except (OSError, ValueError) as exc:
            return JSONResponse(
                {"error": f"reload failed, keeping old snapshot: {exc}"},
                status_code=400,
            )
        return JSONResponse(
            {"status": "reloaded", "triples": fresh.data.count()}
        )

    if explorer_dir is not None and Path(explorer_dir).is_dir():
        app.mount(
            "/explorer",
            StaticFiles(directory=explorer_dir, html=True),
            name="explorer",
        )

    return app

"""Command line entry point: validate, etl, link, query, serve, export.

Exit codes are a contract for scripting:

    0        success
    1        I/O or data parse failure
    2        query error (bad syntax, unsupported feature, format mismatch)
    3..125   validation violation count (small counts report as 3 so the
             codes 1 and 2 stay reserved; larger counts cap at 125)
    64       usage error (unknown flag, unknown subcommand, bad token)
"""

from __future__ import annotations

import json
import sys
from dataclasses import replace
from pathlib import Path
from typing import Optional

import click

from gemforge.etl import read_records, run_etl, sniff_format
from gemforge.linker import (
    LinkSpec,
    SpecError,
    discover_links,
    emit_sameas,
    load_spec,
    review_csv,
)
from gemforge.namespaces import ONTOLOGY_NS, RESOURCE_NS
from gemforge.ontology import (
    OntologyModel,
    load_ontology_file,
    load_shipped_ontology,
    validate_individual,
)
from gemforge.rdf import Format, Graph, Iri, ParseError, serialize
from gemforge.server import (
    ConfigError,
    ServerConfig,
    ServerState,
    apply_env,
    build_snapshot,
    create_app,
    load_config,
    parse_rdf_file,
)
from gemforge.server.render import (
    OUTPUT_TOKENS,
    FormatMismatch,
    body_for,
    execute_query,
    format_for_token,
)

GEM_NS = RESOURCE_NS + "cultural-gems/"

# Friendly spellings accepted next to the server's media-type tokens.
TOKEN_ALIASES = {
    "turtle": "text/rdf+n3",
    "ttl": "text/rdf+n3",
    "html": "text/html",
    "json": "application/json",
    "xml": "application/xml",
    "rdfxml": "application/rdf+xml",
}

# Graph-only shortcuts with no server token equivalent.
GRAPH_ONLY_TOKENS = {
    "nt": Format.NTRIPLES,
    "ntriples": Format.NTRIPLES,
    "jsonld": Format.JSONLD,
}

QUERY_TOKENS = sorted(
    set(OUTPUT_TOKENS) | set(TOKEN_ALIASES) | set(GRAPH_ONLY_TOKENS)
)

EXPORT_FORMATS = {
    "ttl": Format.TURTLE,
    "turtle": Format.TURTLE,
    "nt": Format.NTRIPLES,
    "ntriples": Format.NTRIPLES,
    "rdfxml": Format.RDFXML,
    "jsonld": Format.JSONLD,
}


class _Failure(click.ClickException):
    """A ClickException whose exit code is part of the CLI contract."""

    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.exit_code = code


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _Failure(f"cannot read {path}: {exc.strerror or exc}", 1)


def _write_text(path: Optional[str], text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise _Failure(f"cannot write {path}: {exc.strerror or exc}", 1)


def _load_graph(path: str) -> Graph:
    try:
        return parse_rdf_file(path)
    except OSError as exc:
        raise _Failure(f"cannot read {path}: {exc.strerror or exc}", 1)
    except ParseError as exc:
        raise _Failure(f"{path}: {exc}", 1)


def _load_model(path: Optional[str]) -> OntologyModel:
    try:
        if path is None:
            return load_shipped_ontology()
        return load_ontology_file(path)
    except OSError as exc:
        raise _Failure(f"cannot read {path}: {exc.strerror or exc}", 1)
    except (ParseError, ValueError) as exc:
        raise _Failure(f"{path}: {exc}", 1)


@click.group()
@click.version_option(package_name="gemforge", prog_name="gemforge")
def cli() -> None:
    """Build, check, link, query and serve the cultural gems dataset."""


@cli.command()
@click.argument("data", type=click.Path())
@click.option(
    "--ontology",
    "ontology_path",
    type=click.Path(),
    default=None,
    help="Ontology Turtle file; the bundled one when omitted.",
)
@click.option(
    "--json", "as_json", is_flag=True, help="Machine-readable JSON report."
)
def validate(data: str, ontology_path: Optional[str], as_json: bool) -> None:
    """Check every minted gem against the ontology's shape rules.

    The exit code is the violation count (at least 3, at most 125) or 0
    when the dataset is clean.
    """
    graph = _load_graph(data)
    model = _load_model(ontology_path)
    subjects = sorted(
        {
            t.subject
            for t in graph.match(None, None, None)
            if isinstance(t.subject, Iri) and t.subject.value.startswith(GEM_NS)
        },
        key=lambda s: s.value,
    )
    entries = []
    for subject in subjects:
        report = validate_individual(model, graph, subject)
        for violation in report.violations:
            entries.append(
                {
                    "subject": subject.value,
                    "code": violation.code,
                    "message": violation.message,
                }
            )
    if as_json:
        document = {
            "subjects_checked": len(subjects),
            "violation_count": len(entries),
            "violations": entries,
        }
        click.echo(json.dumps(document, indent=2, ensure_ascii=False))
    else:
        for entry in entries:
            click.echo(
                f"{entry['subject']} {entry['code']}: {entry['message']}"
            )
        click.echo(
            f"checked {len(subjects)} subjects, "
            f"{len(entries)} violations",
            err=True,
        )
    if entries:
        sys.exit(min(max(len(entries), 3), 125))


@cli.command()
@click.argument("source", type=click.Path())
@click.option("--out", "-o", type=click.Path(), default=None)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["auto", "csv", "jsonl"]),
    default="auto",
    help="Input format; auto sniffs from the file suffix.",
)
@click.option(
    "--rdf-format",
    type=click.Choice(["nt", "ttl"]),
    default="nt",
    help="Serialization of the emitted graph.",
)
@click.option(
    "--ontology", "ontology_path", type=click.Path(), default=None
)
def etl(
    source: str,
    out: Optional[str],
    fmt: str,
    rdf_format: str,
    ontology_path: Optional[str],
) -> None:
    """Turn raw venue records into ontology individuals.

    Bad records are rejected and logged to stderr, never emitted; the
    command still exits 0 because the batch itself succeeded.
    """
    text = _read_text(source)
    if fmt == "auto":
        fmt = sniff_format(source)
    model = _load_model(ontology_path)

    def log_reject(err) -> None:
        where = "?" if err.record_id is None else err.record_id
        click.echo(f"reject record {where}: {err.reason}", err=True)

    try:
        graph, stats = run_etl(read_records(text, fmt), model, log_reject)
    except ValueError as exc:
        # a header-level defect poisons the whole file, not one row
        raise _Failure(f"{source}: {exc}", 1)
    target = Format.NTRIPLES if rdf_format == "nt" else Format.TURTLE
    _write_text(out, serialize(graph, target))
    click.echo(
        f"records in {stats.records_in}, minted {stats.resources_minted}, "
        f"rejected {stats.records_rejected}, triples {stats.triples_out}",
        err=True,
    )


@cli.command()
@click.argument("left", type=click.Path())
@click.argument("right", type=click.Path())
@click.option(
    "--config",
    "config_path",
    type=click.Path(),
    default=None,
    help="Link configuration (TOML or JSON); defaults apply when omitted.",
)
@click.option(
    "--accepted",
    type=click.Path(),
    default=None,
    help="Write accepted owl:sameAs triples here instead of stdout.",
)
@click.option(
    "--review",
    "review_path",
    type=click.Path(),
    default=None,
    help="Write the manual-review CSV here.",
)
@click.option(
    "--all-pairs",
    is_flag=True,
    help="Score every pair instead of blocked candidates only.",
)
def link(
    left: str,
    right: str,
    config_path: Optional[str],
    accepted: Optional[str],
    review_path: Optional[str],
    all_pairs: bool,
) -> None:
    """Discover owl:sameAs links between two RDF datasets."""
    left_graph = _load_graph(left)
    right_graph = _load_graph(right)
    if config_path is None:
        spec = LinkSpec()
    else:
        try:
            spec = load_spec(config_path)
        except OSError as exc:
            raise _Failure(
                f"cannot read {config_path}: {exc.strerror or exc}", 1
            )
        except (SpecError, ValueError) as exc:
            raise _Failure(f"{config_path}: {exc}", 1)
    candidates = discover_links(left_graph, right_graph, spec, all_pairs)
    sameas = emit_sameas(candidates)
    _write_text(accepted, serialize(sameas, Format.NTRIPLES))
    if review_path is not None:
        _write_text(review_path, review_csv(candidates))
    reviews = sum(1 for c in candidates if c.verdict == "review")
    click.echo(
        f"{len(candidates)} candidates, {len(sameas)} accepted, "
        f"{reviews} for review",
        err=True,
    )


@cli.command()
@click.argument("data", type=click.Path())
@click.argument("query_text", metavar="[QUERY]", required=False)
@click.option(
    "--file",
    "-f",
    "query_file",
    type=click.Path(),
    default=None,
    help="Read the query from a file instead of the argument.",
)
@click.option(
    "--output",
    type=click.Choice(QUERY_TOKENS),
    default=None,
    help="Result format; Turtle for graphs, JSON for tables when omitted.",
)
def query(
    data: str,
    query_text: Optional[str],
    query_file: Optional[str],
    output: Optional[str],
) -> None:
    """Run a SELECT or DESCRIBE query against an RDF file.

    Output bytes are identical to the web service's /sparql response for
    the same query and format token.
    """
    if (query_text is None) == (query_file is None):
        raise click.UsageError("provide a query string or --file, not both")
    if query_file is not None:
        query_text = _read_text(query_file)
    graph = _load_graph(data)
    try:
        outcome = execute_query(query_text, graph)
    except ParseError as exc:
        raise _Failure(str(exc), 2)
    try:
        if output is None:
            fmt = (
                Format.TURTLE
                if outcome.graph is not None
                else Format.SPARQL_JSON
            )
        elif output in GRAPH_ONLY_TOKENS:
            if outcome.graph is None:
                raise FormatMismatch(
                    f"{output} serializes a graph, but the query"
                    " produced a result table"
                )
            fmt = GRAPH_ONLY_TOKENS[output]
        else:
            fmt = format_for_token(TOKEN_ALIASES.get(output, output), outcome)
        body = body_for(outcome, fmt, RESOURCE_NS, ONTOLOGY_NS)
    except FormatMismatch as exc:
        raise _Failure(str(exc), 2)
    sys.stdout.write(body)


@cli.command()
@click.argument("data", type=click.Path())
@click.option("--out", "-o", type=click.Path(), default=None)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(sorted(EXPORT_FORMATS)),
    required=True,
)
def export(data: str, out: Optional[str], fmt: str) -> None:
    """Re-serialize an RDF file; output bytes are stable across runs."""
    graph = _load_graph(data)
    _write_text(out, serialize(graph, EXPORT_FORMATS[fmt]))


@cli.command()
@click.option(
    "--config",
    "config_path",
    type=click.Path(),
    default=None,
    help="Server configuration file (TOML or JSON).",
)
@click.option("--bind", default=None, metavar="HOST:PORT")
@click.option("--data", "data_path", type=click.Path(), default=None)
@click.option("--ontology", "ontology_path", type=click.Path(), default=None)
@click.option("--links", "links_path", type=click.Path(), default=None)
@click.option(
    "--explorer",
    "explorer_dir",
    type=click.Path(),
    default=None,
    help="Directory of static explorer assets to mount at /explorer.",
)
def serve(
    config_path: Optional[str],
    bind: Optional[str],
    data_path: Optional[str],
    ontology_path: Optional[str],
    links_path: Optional[str],
    explorer_dir: Optional[str],
) -> None:
    """Serve the dataset as dereferenceable linked data over HTTP."""
    try:
        config = (
            load_config(config_path) if config_path else ServerConfig()
        )
        config = apply_env(config)
    except OSError as exc:
        raise _Failure(
            f"cannot read {config_path}: {exc.strerror or exc}", 1
        )
    except (ConfigError, ValueError) as exc:
        raise _Failure(str(exc), 1)
    # flags override both the file and the environment
    flag_env = {}
    if bind is not None:
        flag_env["GEMFORGE_BIND"] = bind
    if data_path is not None:
        flag_env["GEMFORGE_DATA"] = data_path
    if ontology_path is not None:
        flag_env["GEMFORGE_ONTOLOGY"] = ontology_path
    try:
        config = apply_env(config, flag_env)
    except ConfigError as exc:
        raise click.UsageError(str(exc))
    if links_path is not None:
        config = replace(config, links_path=links_path)
    try:
        state = ServerState(build_snapshot(config))
    except OSError as exc:
        raise _Failure(f"cannot load data: {exc.strerror or exc}", 1)
    except (ParseError, ValueError) as exc:
        raise _Failure(str(exc), 1)
    app = create_app(state, explorer_dir=explorer_dir)
    import uvicorn

    uvicorn.run(app, host=config.host, port=config.port, log_level="info")


def main(argv: Optional[list] = None) -> None:
    """Entry point enforcing the exit-code contract around click."""
    try:
        cli.main(args=argv, prog_name="gemforge", standalone_mode=False)
    except click.UsageError as exc:
        exc.show()
        sys.exit(64)
    except click.ClickException as exc:
        exc.show()
        sys.exit(exc.exit_code)
    except click.exceptions.Exit as exc:
        sys.exit(exc.exit_code)
    except click.exceptions.Abort:
        sys.exit(130)
    sys.exit(0)


if __name__ == "__main__":
    main()

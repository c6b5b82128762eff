"""HTTP service over the triple store: dereferenceable URIs, the query
endpoint, ontology pages, and the explorer JSON API."""

from gemforge.server.app import ARC_CAP, create_app
from gemforge.server.config import (
    ConfigError,
    ServerConfig,
    apply_env,
    config_from_mapping,
    load_config,
)
from gemforge.server.render import (
    FormatMismatch,
    OUTPUT_TOKENS,
    QueryOutcome,
    body_for,
    execute_query,
    format_for_token,
)
from gemforge.server.state import (
    ServerState,
    Snapshot,
    build_snapshot,
    parse_rdf_file,
)

__all__ = [
    "ARC_CAP",
    "ConfigError",
    "FormatMismatch",
    "OUTPUT_TOKENS",
    "QueryOutcome",
    "ServerConfig",
    "ServerState",
    "Snapshot",
    "apply_env",
    "body_for",
    "build_snapshot",
    "config_from_mapping",
    "create_app",
    "execute_query",
    "format_for_token",
    "load_config",
    "parse_rdf_file",
]

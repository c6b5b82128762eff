"""Server configuration: bind address, data files, namespaces, CORS.

Sources, later ones winning: built-in defaults, a TOML or JSON config
file, the GEMFORGE_BIND / GEMFORGE_DATA / GEMFORGE_ONTOLOGY environment
variables, explicit keyword overrides from the CLI.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Optional

try:
    import tomllib
except ModuleNotFoundError:  # 3.10
    import tomli as tomllib

from gemforge.namespaces import ONTOLOGY_NS, RESOURCE_NS


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class ServerConfig:
    host: str = "127.0.0.1"
    port: int = 8000
    data_path: Optional[str] = None
    ontology_path: Optional[str] = None  # None serves the bundled ontology
    links_path: Optional[str] = None
    base_resource_ns: str = RESOURCE_NS
    base_ontology_ns: str = ONTOLOGY_NS
    cors_allowed_origins: tuple[str, ...] = ()

    def __post_init__(self):
        for name in ("base_resource_ns", "base_ontology_ns"):
            value = getattr(self, name)
            if not value.endswith("/"):
                raise ConfigError(f"{name} must end with '/': {value!r}")
        if not 0 < self.port < 65536:
            raise ConfigError(f"port out of range: {self.port}")


def _parse_bind(bind: str) -> tuple[str, int]:
    host, sep, port = bind.rpartition(":")
    if not sep or not host:
        raise ConfigError(f"bind address must be host:port, got {bind!r}")
    try:
        return host, int(port)
    except ValueError:
        raise ConfigError(f"bad port in bind address {bind!r}") from None


def config_from_mapping(data: dict) -> ServerConfig:
    known = {f.name for f in fields(ServerConfig)} | {"bind"}
    unknown = set(data) - known
    if unknown:
        raise ConfigError(f"unknown server config keys: {sorted(unknown)}")
    values = dict(data)
    bind = values.pop("bind", None)
    if bind is not None:
        values["host"], values["port"] = _parse_bind(bind)
    if "cors_allowed_origins" in values:
        values["cors_allowed_origins"] = tuple(values["cors_allowed_origins"])
    return ServerConfig(**values)


def load_config(path: str) -> ServerConfig:
    """Read a config file; .json parses as JSON, anything else as TOML.
    The server settings live under a `server` table when present."""
    raw = Path(path).read_bytes()
    if path.endswith(".json"):
        document = json.loads(raw.decode("utf-8"))
    else:
        document = tomllib.loads(raw.decode("utf-8"))
    if not isinstance(document, dict):
        raise ConfigError("config root must be a table")
    section = document.get("server", document)
    if not isinstance(section, dict):
        raise ConfigError("'server' must be a table")
    return config_from_mapping(section)


def apply_env(config: ServerConfig, env: Optional[dict] = None) -> ServerConfig:
    env = os.environ if env is None else env
    updates: dict = {}
    bind = env.get("GEMFORGE_BIND")
    if bind:
        updates["host"], updates["port"] = _parse_bind(bind)
    if env.get("GEMFORGE_DATA"):
        updates["data_path"] = env["GEMFORGE_DATA"]
    if env.get("GEMFORGE_ONTOLOGY"):
        updates["ontology_path"] = env["GEMFORGE_ONTOLOGY"]
    return replace(config, **updates) if updates else config

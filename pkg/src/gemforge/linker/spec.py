"""Link discovery configuration, loadable from TOML or JSON.

Weights are renormalized to sum to 1 on construction so scores stay in
[0, 1] whatever the file says; a zero weight drops its metric entirely.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Union

try:
    import tomllib
except ModuleNotFoundError:  # 3.10
    import tomli as tomllib

METRIC_KINDS = ("levenshtein", "trigram-jaccard", "geo")

DEFAULT_METRICS = (
    ("levenshtein", 0.5),
    ("trigram-jaccard", 0.2),
    ("geo", 0.3),
)


class SpecError(ValueError):
    """The configuration file violates the LinkSpec invariants."""


@dataclass(frozen=True)
class Blocking:
    cell_deg: float = 0.01
    name_prefix_len: int = 4

    def __post_init__(self) -> None:
        if self.cell_deg <= 0:
            raise SpecError(f"cell_deg must be positive, got {self.cell_deg}")
        if self.name_prefix_len < 1:
            raise SpecError(
                f"name_prefix_len must be at least 1, got {self.name_prefix_len}"
            )


@dataclass(frozen=True)
class LinkSpec:
    metrics: tuple[tuple[str, float], ...] = DEFAULT_METRICS
    accept_threshold: float = 0.85
    review_threshold: float = 0.65
    geo_cutoff_m: float = 500.0
    blocking: Blocking = field(default_factory=Blocking)

    def __post_init__(self) -> None:
        for kind, weight in self.metrics:
            if kind not in METRIC_KINDS:
                raise SpecError(f"unknown metric kind {kind!r}")
            if weight < 0:
                raise SpecError(f"negative weight for {kind}: {weight}")
        total = sum(w for _, w in self.metrics)
        if total <= 0:
            raise SpecError("metric weights sum to zero")
        normalized = tuple(
            (kind, weight / total) for kind, weight in self.metrics if weight > 0
        )
        object.__setattr__(self, "metrics", normalized)
        if not 0 < self.accept_threshold <= 1:
            raise SpecError(
                f"accept_threshold must be in (0, 1], got {self.accept_threshold}"
            )
        if not 0 < self.review_threshold <= self.accept_threshold:
            raise SpecError(
                "review_threshold must be in (0, accept_threshold], got "
                f"{self.review_threshold}"
            )
        if self.geo_cutoff_m <= 0:
            raise SpecError(f"geo_cutoff_m must be positive, got {self.geo_cutoff_m}")

    def weight(self, kind: str) -> float:
        for k, w in self.metrics:
            if k == kind:
                return w
        return 0.0


def spec_from_mapping(data: dict) -> LinkSpec:
    fields: dict = {}
    if "metrics" in data:
        try:
            fields["metrics"] = tuple(
                (m["kind"], float(m["weight"])) for m in data["metrics"]
            )
        except (TypeError, KeyError) as exc:
            raise SpecError(
                "metrics must be a list of {kind, weight} tables"
            ) from exc
    for key in ("accept_threshold", "review_threshold", "geo_cutoff_m"):
        if key in data:
            fields[key] = float(data[key])
    if "blocking" in data:
        block = data["blocking"]
        fields["blocking"] = Blocking(
            cell_deg=float(block.get("cell_deg", 0.01)),
            name_prefix_len=int(block.get("name_prefix_len", 4)),
        )
    unknown = set(data) - {
        "metrics",
        "accept_threshold",
        "review_threshold",
        "geo_cutoff_m",
        "blocking",
    }
    if unknown:
        raise SpecError(f"unknown spec keys: {sorted(unknown)}")
    return LinkSpec(**fields)


def load_spec(path: Union[str, Path]) -> LinkSpec:
    path = Path(path)
    raw = path.read_bytes()
    if path.suffix.lower() == ".json":
        data = json.loads(raw)
    else:
        data = tomllib.loads(raw.decode("utf-8"))
    if not isinstance(data, dict):
        raise SpecError("spec file must hold a table at top level")
    return spec_from_mapping(data)

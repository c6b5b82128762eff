"""Input records for the venue batch pipeline.

Two interchange formats carry the same schema: CSV with a fixed documented
header, and JSON lines. Field validation lives on the record itself so both
readers reject identically.
"""

from __future__ import annotations

import csv
import datetime
import io
import json
from dataclasses import dataclass, field
from typing import Iterator, Optional

CSV_HEADER = [
    "id",
    "name",
    "categories",
    "city_id",
    "city_name",
    "lat",
    "lon",
    "description_lang",
    "description",
    "links",
    "valid_from",
    "valid_to",
    "osm_tags",
]


class RecordError(ValueError):
    """A single record failed validation; carries the reason for reject logs."""

    def __init__(self, reason: str, record_id: Optional[int] = None):
        super().__init__(reason)
        self.reason = reason
        self.record_id = record_id


@dataclass(frozen=True)
class GemRecord:
    id: int
    name: str
    categories: tuple[str, ...]
    city_id: int
    city_name: str
    lat: float
    lon: float
    descriptions: tuple[tuple[str, str], ...] = ()  # (lang, text)
    links: tuple[str, ...] = ()
    valid_from: Optional[datetime.date] = None
    valid_to: Optional[datetime.date] = None
    osm_tags: tuple[tuple[str, str], ...] = ()

    def __post_init__(self) -> None:
        if self.id <= 0:
            raise RecordError(f"id must be positive, got {self.id}", self.id)
        if not self.name.strip():
            raise RecordError("name is empty", self.id)
        if self.city_id <= 0:
            raise RecordError(f"city_id must be positive, got {self.city_id}", self.id)
        if not -90.0 <= self.lat <= 90.0:
            raise RecordError(f"latitude {self.lat} out of range", self.id)
        if not -180.0 <= self.lon <= 180.0:
            raise RecordError(f"longitude {self.lon} out of range", self.id)
        if self.valid_to is not None and self.valid_from is None:
            raise RecordError("valid_to without valid_from", self.id)
        if (
            self.valid_from is not None
            and self.valid_to is not None
            and self.valid_to < self.valid_from
        ):
            raise RecordError(
                f"valid_to {self.valid_to} before valid_from {self.valid_from}",
                self.id,
            )


def _parse_int(raw: str, fieldname: str) -> int:
    try:
        return int(raw)
    except (TypeError, ValueError):
        raise RecordError(f"{fieldname} is not an integer: {raw!r}") from None


def _parse_float(raw: str, fieldname: str) -> float:
    try:
        return float(raw)
    except (TypeError, ValueError):
        raise RecordError(f"{fieldname} is not a number: {raw!r}") from None


def _parse_date(raw: str, fieldname: str) -> Optional[datetime.date]:
    if not raw:
        return None
    try:
        return datetime.date.fromisoformat(raw)
    except ValueError:
        raise RecordError(f"{fieldname} is not an ISO date: {raw!r}") from None


def record_from_csv_row(row: dict[str, str]) -> GemRecord:
    rid = _parse_int(row.get("id", ""), "id")
    try:
        categories = tuple(c for c in (row.get("categories") or "").split("|") if c)
        descriptions: tuple[tuple[str, str], ...] = ()
        if row.get("description"):
            descriptions = ((row.get("description_lang") or "en", row["description"]),)
        links = tuple(u for u in (row.get("links") or "").split("|") if u)
        osm_tags = []
        for pair in (row.get("osm_tags") or "").split("|"):
            if not pair:
                continue
            if "=" not in pair:
                raise RecordError(f"osm_tags entry without '=': {pair!r}", rid)
            key, _, value = pair.partition("=")
            osm_tags.append((key, value))
        return GemRecord(
            id=rid,
            name=row.get("name", ""),
            categories=categories,
            city_id=_parse_int(row.get("city_id", ""), "city_id"),
            city_name=row.get("city_name", ""),
            lat=_parse_float(row.get("lat", ""), "lat"),
            lon=_parse_float(row.get("lon", ""), "lon"),
            descriptions=descriptions,
            links=links,
            valid_from=_parse_date(row.get("valid_from", ""), "valid_from"),
            valid_to=_parse_date(row.get("valid_to", ""), "valid_to"),
            osm_tags=tuple(osm_tags),
        )
    except RecordError as exc:
        if exc.record_id is None:
            raise RecordError(exc.reason, rid) from None
        raise


def record_from_json(obj: dict) -> GemRecord:
    rid = obj.get("id")
    if not isinstance(rid, int):
        raise RecordError(f"id is not an integer: {rid!r}")
    try:
        descriptions = tuple(sorted((obj.get("descriptions") or {}).items()))
        osm_tags = tuple(sorted((obj.get("osm_tags") or {}).items()))
        valid_from = _parse_date(obj.get("valid_from") or "", "valid_from")
        valid_to = _parse_date(obj.get("valid_to") or "", "valid_to")
        return GemRecord(
            id=rid,
            name=obj.get("name", ""),
            categories=tuple(obj.get("categories") or ()),
            city_id=obj.get("city_id") or 0,
            city_name=obj.get("city_name", ""),
            lat=float(obj.get("lat")),
            lon=float(obj.get("lon")),
            descriptions=descriptions,
            links=tuple(obj.get("links") or ()),
            valid_from=valid_from,
            valid_to=valid_to,
            osm_tags=osm_tags,
        )
    except RecordError as exc:
        if exc.record_id is None:
            raise RecordError(exc.reason, rid) from None
        raise
    except (TypeError, ValueError) as exc:
        raise RecordError(str(exc), rid) from None


RawResult = tuple[Optional[GemRecord], Optional[RecordError]]


def read_records(text: str, fmt: str) -> Iterator[RawResult]:
    """Yield (record, None) or (None, error) per input row, never raising
    mid-stream; a malformed row must not hide the rows after it."""
    if fmt == "csv":
        reader = csv.DictReader(io.StringIO(text))
        if reader.fieldnames is None:
            return
        unknown = set(reader.fieldnames) - set(CSV_HEADER)
        if unknown:
            raise RecordError(f"unknown CSV columns: {sorted(unknown)}")
        for row in reader:
            try:
                yield record_from_csv_row(row), None
            except RecordError as exc:
                yield None, exc
    elif fmt == "jsonl":
        for line_no, line in enumerate(text.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                yield None, RecordError(f"line {line_no}: bad JSON: {exc}")
                continue
            try:
                yield record_from_json(obj), None
            except RecordError as exc:
                yield None, exc
    else:
        raise ValueError(f"unknown input format {fmt!r}")


def sniff_format(path: str) -> str:
    return "jsonl" if path.endswith((".jsonl", ".ndjson", ".json")) else "csv"

"""Candidate generation: geographic grid cells OR shared name prefixes.

A pair survives blocking when the two entities fall in the same or an
adjacent grid cell, or when their slugs share a prefix. Longitude cell
indexes wrap at the antimeridian; latitude does not wrap. At latitudes
beyond ~60° a cell_deg of 0.01 narrows below the default 500 m cutoff,
so the adjacency guarantee holds for mid-latitude data.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from gemforge.linker.entities import LinkEntity
from gemforge.linker.spec import LinkSpec


def _cell(lat: float, lon: float, cell_deg: float) -> tuple[int, int]:
    cols = max(1, round(360.0 / cell_deg))
    row = math.floor((lat + 90.0) / cell_deg)
    col = math.floor((lon + 180.0) / cell_deg) % cols
    return row, col


def _neighborhood(
    cell: tuple[int, int], cell_deg: float
) -> Iterable[tuple[int, int]]:
    cols = max(1, round(360.0 / cell_deg))
    row, col = cell
    for dr in (-1, 0, 1):
        for dc in (-1, 0, 1):
            yield row + dr, (col + dc) % cols


def block(
    left: Sequence[LinkEntity],
    right: Sequence[LinkEntity],
    spec: LinkSpec,
) -> list[tuple[LinkEntity, LinkEntity]]:
    """All candidate pairs, ordered by (left IRI, right IRI)."""
    cell_deg = spec.blocking.cell_deg
    prefix_len = spec.blocking.name_prefix_len

    by_cell: dict[tuple[int, int], list[int]] = {}
    by_prefix: dict[str, list[int]] = {}
    for idx, ent in enumerate(right):
        if ent.lat is not None and ent.lon is not None:
            by_cell.setdefault(_cell(ent.lat, ent.lon, cell_deg), []).append(idx)
        if ent.slug:
            by_prefix.setdefault(ent.slug[:prefix_len], []).append(idx)

    pairs: list[tuple[LinkEntity, LinkEntity]] = []
    for ent in left:
        matched: set[int] = set()
        if ent.lat is not None and ent.lon is not None:
            home = _cell(ent.lat, ent.lon, cell_deg)
            for cell in _neighborhood(home, cell_deg):
                matched.update(by_cell.get(cell, ()))
        if ent.slug:
            matched.update(by_prefix.get(ent.slug[:prefix_len], ()))
        for idx in sorted(matched):
            pairs.append((ent, right[idx]))
    pairs.sort(key=lambda pair: (pair[0].iri.value, pair[1].iri.value))
    return pairs

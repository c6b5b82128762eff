"""Pair scoring, verdicts, and owl:sameAs emission.

Scores are weighted sums of the configured metrics. Accepts are made
unique per left resource: among the pairs a left accepts, the highest
score wins (ties broken toward the lexicographically smaller right IRI)
and the rest drop to review so they still reach the review file.
"""

from __future__ import annotations

import csv
import io
import logging
from dataclasses import dataclass

from gemforge.linker.blocking import block
from gemforge.linker.entities import LinkEntity, entities_from_graph
from gemforge.linker.similarity import (
    geo_sim,
    levenshtein_sim,
    trigram_jaccard,
)
from gemforge.linker.spec import LinkSpec
from gemforge.namespaces import OWL_SAMEAS
from gemforge.rdf.graph import Graph
from gemforge.rdf.terms import Iri, Triple

log = logging.getLogger("gemforge.linker")

ACCEPT = "accept"
REVIEW = "review"
REJECT = "reject"


@dataclass(frozen=True)
class LinkCandidate:
    left: Iri
    right: Iri
    score: float
    verdict: str


def score_pair(left: LinkEntity, right: LinkEntity, spec: LinkSpec) -> float:
    total = 0.0
    for kind, weight in spec.metrics:
        if kind == "geo":
            if (
                left.lat is None
                or left.lon is None
                or right.lat is None
                or right.lon is None
            ):
                log.debug(
                    "geo metric skipped for %s / %s: missing coordinates",
                    left.iri.value,
                    right.iri.value,
                )
                continue
            total += weight * geo_sim(
                (left.lat, left.lon), (right.lat, right.lon), spec.geo_cutoff_m
            )
            continue
        if not left.slug or not right.slug:
            log.debug(
                "%s metric skipped for %s / %s: missing label",
                kind,
                left.iri.value,
                right.iri.value,
            )
            continue
        if kind == "levenshtein":
            total += weight * levenshtein_sim(left.slug, right.slug)
        else:
            total += weight * trigram_jaccard(left.slug, right.slug)
    return total


def _verdict(score: float, spec: LinkSpec) -> str:
    if score >= spec.accept_threshold:
        return ACCEPT
    if score >= spec.review_threshold:
        return REVIEW
    return REJECT


def dedupe_accepts(candidates: list[LinkCandidate]) -> list[LinkCandidate]:
    """Enforce at-most-one accept per left; losers drop to review."""
    best: dict[Iri, LinkCandidate] = {}
    for cand in candidates:
        if cand.verdict != ACCEPT:
            continue
        incumbent = best.get(cand.left)
        if (
            incumbent is None
            or cand.score > incumbent.score
            or (
                cand.score == incumbent.score
                and cand.right.value < incumbent.right.value
            )
        ):
            best[cand.left] = cand
    out = []
    for cand in candidates:
        if cand.verdict == ACCEPT and best[cand.left] is not cand:
            cand = LinkCandidate(cand.left, cand.right, cand.score, REVIEW)
        out.append(cand)
    return out


def discover_links(
    left: Graph,
    right: Graph,
    spec: LinkSpec = LinkSpec(),
    all_pairs: bool = False,
) -> list[LinkCandidate]:
    """Score candidate pairs and return them best-first per left resource.

    all_pairs=True bypasses blocking; the accepted set must not change,
    only the work done.
    """
    left_entities = entities_from_graph(left)
    right_entities = entities_from_graph(right)
    if all_pairs:
        pairs = [(l, r) for l in left_entities for r in right_entities]
    else:
        pairs = block(left_entities, right_entities, spec)
    candidates = []
    for ent_l, ent_r in pairs:
        score = score_pair(ent_l, ent_r, spec)
        candidates.append(
            LinkCandidate(ent_l.iri, ent_r.iri, score, _verdict(score, spec))
        )
    candidates.sort(key=lambda c: (c.left.value, -c.score, c.right.value))
    return dedupe_accepts(candidates)


def emit_sameas(
    candidates: list[LinkCandidate], verdict_filter: str = ACCEPT
) -> Graph:
    out = Graph()
    for cand in candidates:
        if cand.verdict == verdict_filter:
            out.add(Triple(cand.left, OWL_SAMEAS, cand.right))
    return out


def review_csv(candidates: list[LinkCandidate]) -> str:
    """The review-tier export; accepts and rejects never appear here."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["left_iri", "right_iri", "score"])
    for cand in candidates:
        if cand.verdict == REVIEW:
            writer.writerow(
                [cand.left.value, cand.right.value, f"{cand.score:.6f}"]
            )
    return buffer.getvalue()

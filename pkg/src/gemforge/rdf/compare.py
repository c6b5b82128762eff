"""Graph isomorphism up to blank-node relabeling.

Exhaustive bijection search with signature pruning; intended for test-sized
graphs (bounded number of blank nodes), which is all the fixtures need.
"""

from __future__ import annotations

from gemforge.rdf.graph import Graph
from gemforge.rdf.terms import BlankNode, Triple

MAX_BLANK_NODES = 12


def _split(graph: Graph) -> tuple[set[Triple], set[Triple]]:
    ground: set[Triple] = set()
    blanked: set[Triple] = set()
    for t in graph:
        if isinstance(t.subject, BlankNode) or isinstance(t.object, BlankNode):
            blanked.add(t)
        else:
            ground.add(t)
    return ground, blanked


def _signature(node: BlankNode, triples: set[Triple]) -> tuple:
    sig = []
    for t in triples:
        if t.subject == node:
            other = "*" if isinstance(t.object, BlankNode) else t.object.n3()
            sig.append(("s", t.predicate.n3(), other))
        if t.object == node:
            other = "*" if isinstance(t.subject, BlankNode) else t.subject.n3()
            sig.append(("o", t.predicate.n3(), other))
    return tuple(sorted(sig))


def _apply(t: Triple, mapping: dict[BlankNode, BlankNode]) -> Triple:
    s = mapping.get(t.subject, t.subject) if isinstance(t.subject, BlankNode) else t.subject
    o = mapping.get(t.object, t.object) if isinstance(t.object, BlankNode) else t.object
    return Triple(s, t.predicate, o)


def isomorphic(a: Graph, b: Graph, max_blank_nodes: int = MAX_BLANK_NODES) -> bool:
    """True iff some blank-node bijection maps graph ``a`` onto graph ``b``."""
    if len(a) != len(b):
        return False
    ground_a, blank_a = _split(a)
    ground_b, blank_b = _split(b)
    if ground_a != ground_b:
        return False
    nodes_a = sorted(a.blank_nodes(), key=lambda n: n.label)
    nodes_b = sorted(b.blank_nodes(), key=lambda n: n.label)
    if len(nodes_a) != len(nodes_b):
        return False
    if not nodes_a:
        return blank_a == blank_b
    if len(nodes_a) > max_blank_nodes:
        raise ValueError(
            f"isomorphism search limited to {max_blank_nodes} blank nodes, "
            f"got {len(nodes_a)}"
        )

    sigs_b: dict[tuple, list[BlankNode]] = {}
    for n in nodes_b:
        sigs_b.setdefault(_signature(n, blank_b), []).append(n)
    candidates: dict[BlankNode, list[BlankNode]] = {}
    for n in nodes_a:
        cands = sigs_b.get(_signature(n, blank_a), [])
        if not cands:
            return False
        candidates[n] = cands

    # Assign the most constrained nodes first.
    order = sorted(nodes_a, key=lambda n: (len(candidates[n]), n.label))

    def backtrack(i: int, mapping: dict[BlankNode, BlankNode], used: set[BlankNode]) -> bool:
        if i == len(order):
            return {_apply(t, mapping) for t in blank_a} == blank_b
        node = order[i]
        for cand in candidates[node]:
            if cand in used:
                continue
            mapping[node] = cand
            used.add(cand)
            if backtrack(i + 1, mapping, used):
                return True
            del mapping[node]
            used.discard(cand)
        return False

    return backtrack(0, {}, set())

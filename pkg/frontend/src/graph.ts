/**
 * Canvas graph model: one NodeView per distinct IRI, edges keyed by the
 * underlying triple. Applying the same node document twice is a no-op,
 * which is what makes expansion idempotent.
 */

import { OWL_SAMEAS, RDF_TYPE, classifyIri, localName } from "./config.js";
import type { EdgeView, NodeDoc, NodeView } from "./types.js";

const SEP = "\u0000";

/** Deterministic small hash, used to fan out new neighbors around a node. */
function angleFor(iri: string): number {
  let h = 0;
  for (let i = 0; i < iri.length; i++) {
    h = (h * 31 + iri.charCodeAt(i)) | 0;
  }
  return ((h >>> 0) % 360) * (Math.PI / 180);
}

function newNode(iri: string, x: number, y: number): NodeView {
  return {
    iri,
    label: localName(iri),
    kind: classifyIri(iri),
    expanded: false,
    dead: false,
    truncated: false,
    x,
    y,
    vx: 0,
    vy: 0,
    pinned: false,
    geo: null,
    literals: [],
    anonymous: [],
    types: [],
  };
}

export class CanvasGraph {
  private nodes = new Map<string, NodeView>();
  private edges = new Map<string, EdgeView>();
  private groups = new Map<string, NodeView>();

  node(iri: string): NodeView | undefined {
    return this.nodes.get(iri);
  }

  hasNode(iri: string): boolean {
    return this.nodes.has(iri);
  }

  nodeList(): NodeView[] {
    return [...this.nodes.values()];
  }

  edgeList(): EdgeView[] {
    return [...this.edges.values()];
  }

  nodeKeys(): Set<string> {
    return new Set(this.nodes.keys());
  }

  edgeKeys(): Set<string> {
    return new Set(this.edges.keys());
  }

  /** The collapsed literal bundle attached to a subject, if any. */
  literalGroup(subject: string): NodeView | undefined {
    return this.groups.get(subject);
  }

  ensureNode(iri: string, near?: NodeView): NodeView {
    const existing = this.nodes.get(iri);
    if (existing) {
      return existing;
    }
    let x = 0;
    let y = 0;
    if (near) {
      const a = angleFor(iri);
      x = near.x + Math.cos(a) * 140;
      y = near.y + Math.sin(a) * 140;
    } else {
      const a = angleFor(iri);
      x = Math.cos(a) * 40;
      y = Math.sin(a) * 40;
    }
    const node = newNode(iri, x, y);
    this.nodes.set(iri, node);
    return node;
  }

  /**
   * Register the edge for one data triple. Both endpoints must already be
   * on the canvas; edges never point at nodes that are not rendered.
   */
  addEdge(
    from: string,
    predicate: string,
    to: string,
    direction: "out" | "in",
  ): void {
    if (!this.nodes.has(from) || !this.nodes.has(to)) {
      throw new Error(`edge endpoints must be on the canvas: ${from} -> ${to}`);
    }
    const key = from + SEP + predicate + SEP + to;
    if (!this.edges.has(key)) {
      this.edges.set(key, { from, to, predicate, direction });
    }
  }

  /** sameAs is symmetric; store one edge per unordered pair. */
  addSameAs(a: string, b: string): void {
    if (!this.nodes.has(a) || !this.nodes.has(b)) {
      throw new Error(`edge endpoints must be on the canvas: ${a} <-> ${b}`);
    }
    const [from, to] = a < b ? [a, b] : [b, a];
    const key = from + SEP + OWL_SAMEAS + SEP + to;
    if (!this.edges.has(key)) {
      this.edges.set(key, { from, to, predicate: OWL_SAMEAS, direction: "sameAs" });
    }
  }

  /**
   * Merge one /api/node response into the canvas. IRI neighbors become
   * nodes and edges; literal and blank-node arcs stay on the subject and
   * surface in its detail panel.
   */
  applyNodeDoc(doc: NodeDoc): NodeView {
    const center = this.ensureNode(doc.iri);
    center.expanded = true;
    center.dead = false;
    center.label = doc.label ?? localName(doc.iri);
    center.truncated = doc.truncated;
    center.geo = doc.geo ?? null;
    center.types = [...doc.types];
    center.literals = doc.out
      .filter((arc) => arc.o_kind === "literal")
      .map((arc) => ({ predicate: arc.p, text: arc.o }));
    center.anonymous = doc.out
      .filter((arc) => arc.o_kind === "bnode")
      .map((arc) => ({ predicate: arc.p, label: arc.o }));
    this.syncLiteralGroup(center);

    for (const type of doc.types) {
      // A type target is a class even when it lives in a reused external
      // vocabulary rather than the project ontology namespace.
      this.ensureNode(type, center).kind = "class";
      this.addEdge(doc.iri, RDF_TYPE, type, "out");
    }
    for (const arc of doc.out) {
      if (arc.o_kind !== "iri") {
        continue;
      }
      this.ensureNode(arc.o, center);
      this.addEdge(doc.iri, arc.p, arc.o, "out");
    }
    for (const arc of doc.in) {
      if (arc.s.startsWith("_:")) {
        continue;
      }
      this.ensureNode(arc.s, center);
      this.addEdge(arc.s, arc.p, doc.iri, "in");
    }
    for (const peer of doc.sameAs) {
      this.ensureNode(peer, center);
      this.addSameAs(doc.iri, peer);
    }
    return center;
  }

  private syncLiteralGroup(subject: NodeView): void {
    if (subject.literals.length === 0) {
      this.groups.delete(subject.iri);
      return;
    }
    let group = this.groups.get(subject.iri);
    if (!group) {
      group = newNode(subject.iri + "#literals", subject.x, subject.y);
      group.kind = "literal-group";
      this.groups.set(subject.iri, group);
    }
    group.label = `${subject.literals.length} literal${
      subject.literals.length === 1 ? "" : "s"
    }`;
  }

  markDead(iri: string): void {
    const node = this.nodes.get(iri);
    if (node) {
      node.dead = true;
    }
  }

  clear(): void {
    this.nodes.clear();
    this.edges.clear();
    this.groups.clear();
  }
}

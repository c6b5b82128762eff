/** Wire format of `GET /api/node` and the view model built from it. */

export interface OutArc {
  p: string;
  o: string;
  o_kind: "iri" | "literal" | "bnode";
}

export interface InArc {
  s: string;
  p: string;
}

export interface GeoPoint {
  lat: number;
  lon: number;
}

/** One node document as the server returns it. */
export interface NodeDoc {
  iri: string;
  label: string | null;
  types: string[];
  out: OutArc[];
  in: InArc[];
  sameAs: string[];
  truncated: boolean;
  geo?: GeoPoint;
}

export type NodeKind = "gem" | "class" | "external" | "literal-group";

export type EdgeDirection = "out" | "in" | "sameAs";

/** A literal arc, shown in the detail panel rather than on the canvas. */
export interface LiteralEntry {
  predicate: string;
  text: string;
}

/** A blank-node arc; not dereferenceable, so panel-only like literals. */
export interface AnonymousArc {
  predicate: string;
  label: string;
}

export interface NodeView {
  iri: string;
  label: string;
  kind: NodeKind;
  expanded: boolean;
  /** Set when the server answered 404 for this IRI. */
  dead: boolean;
  /** Server reported more arcs than it returned. */
  truncated: boolean;
  x: number;
  y: number;
  vx: number;
  vy: number;
  /** Pinned nodes keep their position; set when the user drags. */
  pinned: boolean;
  geo: GeoPoint | null;
  literals: LiteralEntry[];
  anonymous: AnonymousArc[];
  types: string[];
}

/**
 * One rendered edge. `from`/`to` are the subject and object IRIs of the
 * underlying triple, so the same triple seen from either endpoint maps to
 * the same edge. sameAs pairs are canonicalized (lexicographically smaller
 * IRI first) because the link is symmetric.
 */
export interface EdgeView {
  from: string;
  to: string;
  predicate: string;
  direction: EdgeDirection;
}

export interface SearchHit {
  iri: string;
  label: string;
}

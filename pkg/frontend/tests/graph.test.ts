import { describe, expect, it } from "vitest";

import { GEM_NS, ONTOLOGY_NS, OWL_SAMEAS, RDF_TYPE } from "../src/config.js";
import { CanvasGraph } from "../src/graph.js";
import type { NodeDoc } from "../src/types.js";

const GEM = GEM_NS + "27213";
const CITY = "https://culturalgems.jrc.ec.europa.eu/resource/city/lisboa";
const MUSEUM = ONTOLOGY_NS + "Museum";
const HOME = ONTOLOGY_NS + "EUCultureFromHome";
const DBPEDIA = "http://dbpedia.org/resource/Museu_do_Fado";
const IN_CITY = ONTOLOGY_NS + "inCity";
const HAS_GEM = ONTOLOGY_NS + "hasGem";
const LABEL = "http://www.w3.org/2000/01/rdf-schema#label";

function gemDoc(): NodeDoc {
  return {
    iri: GEM,
    label: "Museu do Fado",
    types: [MUSEUM, HOME],
    out: [
      { p: IN_CITY, o: CITY, o_kind: "iri" },
      { p: LABEL, o: "Museu do Fado", o_kind: "literal" },
      { p: ONTOLOGY_NS + "interval", o: "_:b0", o_kind: "bnode" },
    ],
    in: [{ s: CITY, p: HAS_GEM }],
    sameAs: [DBPEDIA],
    truncated: false,
    geo: { lat: 38.71, lon: -9.1283 },
  };
}

describe("applyNodeDoc", () => {
  it("adds IRI neighbors as nodes and edges", () => {
    const g = new CanvasGraph();
    g.applyNodeDoc(gemDoc());
    expect(g.nodeKeys()).toEqual(new Set([GEM, CITY, MUSEUM, HOME, DBPEDIA]));
    const edges = g.edgeList();
    expect(edges).toHaveLength(5);
    const byPredicate = new Map(edges.map((e) => [e.predicate + e.to, e]));
    expect(byPredicate.has(RDF_TYPE + MUSEUM)).toBe(true);
    expect(byPredicate.has(RDF_TYPE + HOME)).toBe(true);
    expect(byPredicate.has(IN_CITY + CITY)).toBe(true);
    expect(byPredicate.has(HAS_GEM + GEM)).toBe(true);
    expect(edges.filter((e) => e.direction === "sameAs")).toHaveLength(1);
  });

  it("is idempotent: applying the same document twice changes nothing", () => {
    const g = new CanvasGraph();
    g.applyNodeDoc(gemDoc());
    const nodesBefore = g.nodeKeys();
    const edgesBefore = g.edgeKeys();
    g.applyNodeDoc(gemDoc());
    expect(g.nodeKeys()).toEqual(nodesBefore);
    expect(g.edgeKeys()).toEqual(edgesBefore);
  });

  it("keeps literals and blank nodes off the canvas", () => {
    const g = new CanvasGraph();
    const center = g.applyNodeDoc(gemDoc());
    expect(g.hasNode("Museu do Fado")).toBe(false);
    expect(g.hasNode("_:b0")).toBe(false);
    expect(center.literals).toEqual([
      { predicate: LABEL, text: "Museu do Fado" },
    ]);
    expect(center.anonymous).toEqual([
      { predicate: ONTOLOGY_NS + "interval", label: "_:b0" },
    ]);
  });

  it("groups literals under their subject", () => {
    const g = new CanvasGraph();
    g.applyNodeDoc(gemDoc());
    const group = g.literalGroup(GEM);
    expect(group).toBeDefined();
    expect(group!.kind).toBe("literal-group");
    expect(group!.label).toBe("1 literal");
    expect(g.literalGroup(CITY)).toBeUndefined();
  });

  it("skips blank-node subjects in inbound arcs", () => {
    const g = new CanvasGraph();
    const doc = gemDoc();
    doc.in.push({ s: "_:b9", p: ONTOLOGY_NS + "about" });
    g.applyNodeDoc(doc);
    expect(g.hasNode("_:b9")).toBe(false);
  });

  it("classifies node kinds by namespace", () => {
    const g = new CanvasGraph();
    g.applyNodeDoc(gemDoc());
    expect(g.node(GEM)!.kind).toBe("gem");
    expect(g.node(CITY)!.kind).toBe("gem");
    expect(g.node(MUSEUM)!.kind).toBe("class");
    expect(g.node(DBPEDIA)!.kind).toBe("external");
  });

  it("treats type targets from reused vocabularies as classes", () => {
    const g = new CanvasGraph();
    const doc = gemDoc();
    const arco = "https://w3id.org/arco/ontology/arco/CulturalProperty";
    doc.types.push(arco);
    g.applyNodeDoc(doc);
    expect(g.node(arco)!.kind).toBe("class");
  });

  it("records geo and truncation on the expanded node", () => {
    const g = new CanvasGraph();
    const center = g.applyNodeDoc(gemDoc());
    expect(center.geo).toEqual({ lat: 38.71, lon: -9.1283 });
    expect(center.truncated).toBe(false);
    expect(center.expanded).toBe(true);
  });
});

describe("edge identity", () => {
  it("sees one edge when the same triple arrives from both endpoints", () => {
    const g = new CanvasGraph();
    g.applyNodeDoc(gemDoc());
    const before = g.edgeKeys();
    // Expanding the city reports the same inCity triple as an inbound arc
    // of the gem seen from the other side.
    g.applyNodeDoc({
      iri: CITY,
      label: "Lisboa",
      types: [],
      out: [],
      in: [{ s: GEM, p: IN_CITY }],
      sameAs: [],
      truncated: false,
    });
    expect(g.edgeKeys()).toEqual(before);
  });

  it("canonicalizes sameAs pairs regardless of reporting side", () => {
    const g = new CanvasGraph();
    g.ensureNode(GEM);
    g.ensureNode(DBPEDIA);
    g.addSameAs(GEM, DBPEDIA);
    g.addSameAs(DBPEDIA, GEM);
    const edges = g.edgeList().filter((e) => e.direction === "sameAs");
    expect(edges).toHaveLength(1);
    expect(edges[0].predicate).toBe(OWL_SAMEAS);
  });

  it("keeps parallel predicates between one pair as separate edges", () => {
    const g = new CanvasGraph();
    g.ensureNode(GEM);
    g.ensureNode(CITY);
    g.addEdge(GEM, IN_CITY, CITY, "out");
    g.addEdge(GEM, ONTOLOGY_NS + "locatedIn", CITY, "out");
    expect(g.edgeList()).toHaveLength(2);
  });

  it("refuses edges whose endpoints are not on the canvas", () => {
    const g = new CanvasGraph();
    g.ensureNode(GEM);
    expect(() => g.addEdge(GEM, IN_CITY, CITY, "out")).toThrow(
      /endpoints must be on the canvas/,
    );
    expect(() => g.addSameAs(GEM, DBPEDIA)).toThrow(
      /endpoints must be on the canvas/,
    );
  });
});

describe("housekeeping", () => {
  it("clear drops nodes, edges, and literal groups", () => {
    const g = new CanvasGraph();
    g.applyNodeDoc(gemDoc());
    g.clear();
    expect(g.nodeList()).toHaveLength(0);
    expect(g.edgeList()).toHaveLength(0);
    expect(g.literalGroup(GEM)).toBeUndefined();
  });

  it("markDead flags an existing node", () => {
    const g = new CanvasGraph();
    g.ensureNode(GEM);
    g.markDead(GEM);
    expect(g.node(GEM)!.dead).toBe(true);
  });

  it("falls back to the IRI local name for labels", () => {
    const g = new CanvasGraph();
    const node = g.ensureNode(MUSEUM);
    expect(node.label).toBe("Museum");
  });
});

/** Namespace constants mirroring the dataset's vocabulary. */

import type { NodeKind } from "./types.js";

export const RESOURCE_NS = "https://culturalgems.jrc.ec.europa.eu/resource/";
export const GEM_NS = RESOURCE_NS + "cultural-gems/";
export const ONTOLOGY_NS =
  "https://culturalgems.jrc.ec.europa.eu/ontology/cultural-gems/";

export const RDF_TYPE = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
export const RDFS_LABEL = "http://www.w3.org/2000/01/rdf-schema#label";
export const OWL_SAMEAS = "http://www.w3.org/2002/07/owl#sameAs";

/**
 * Kind drives styling and expandability. Anything under the resource
 * namespace (gems, cities, location types) dereferences locally and is
 * drawn as a gem-style node; ontology terms are classes; the rest is
 * external data reached through sameAs or outbound links.
 */
export function classifyIri(iri: string): NodeKind {
  if (iri.startsWith(RESOURCE_NS)) {
    return "gem";
  }
  if (iri.startsWith(ONTOLOGY_NS)) {
    return "class";
  }
  return "external";
}

/** Trailing path segment or fragment, as a fallback display name. */
export function localName(iri: string): string {
  const hash = iri.lastIndexOf("#");
  if (hash >= 0 && hash < iri.length - 1) {
    return iri.slice(hash + 1);
  }
  const trimmed = iri.endsWith("/") ? iri.slice(0, -1) : iri;
  const slash = trimmed.lastIndexOf("/");
  return slash >= 0 ? trimmed.slice(slash + 1) : trimmed;
}

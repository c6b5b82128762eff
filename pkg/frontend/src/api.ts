/**
 * The two server endpoints the explorer consumes. Everything is a GET;
 * the UI never issues write requests.
 */

import { RDFS_LABEL } from "./config.js";
import type { NodeDoc, SearchHit } from "./types.js";

export type NodeFetchResult =
  | { kind: "ok"; doc: NodeDoc }
  | { kind: "missing" }
  | { kind: "error"; status: number };

interface SparqlBinding {
  [name: string]: { type: string; value: string } | undefined;
}

/** Escape characters that would break out of a quoted SPARQL string. */
function escapeStringLiteral(text: string): string {
  return text
    .replace(/\\/g, "\\\\")
    .replace(/"/g, '\\"')
    .replace(/\n/g, " ")
    .replace(/\r/g, " ");
}

/** Quote regex metacharacters so the search box matches text literally. */
function escapeRegex(text: string): string {
  return text.replace(/[.*+?^${}()|[\]\\]/g, "\\$&");
}

export class ApiClient {
  constructor(private readonly base: string = "") {}

  async fetchNode(
    iri: string,
    dir: "out" | "in" | "both" = "both",
  ): Promise<NodeFetchResult> {
    const url =
      `${this.base}/api/node?iri=${encodeURIComponent(iri)}` +
      `&dir=${encodeURIComponent(dir)}`;
    const res = await fetch(url);
    if (res.status === 404) {
      return { kind: "missing" };
    }
    if (!res.ok) {
      return { kind: "error", status: res.status };
    }
    const doc = (await res.json()) as NodeDoc;
    return { kind: "ok", doc };
  }

  /** Label search over the dataset, backed by the SPARQL endpoint. */
  async searchLabels(text: string, limit = 20): Promise<SearchHit[]> {
    const pattern = escapeStringLiteral(escapeRegex(text.trim()));
    const query =
      `SELECT ?s ?label WHERE { ` +
      `?s <${RDFS_LABEL}> ?label . ` +
      `FILTER(regex(?label, "${pattern}", "i")) } ` +
      `LIMIT ${limit}`;
    const url =
      `${this.base}/sparql?query=${encodeURIComponent(query)}` +
      `&output=${encodeURIComponent("application/json")}`;
    const res = await fetch(url);
    if (!res.ok) {
      throw new Error(`search failed with status ${res.status}`);
    }
    const body = (await res.json()) as {
      results: { bindings: SparqlBinding[] };
    };
    const hits: SearchHit[] = [];
    for (const row of body.results.bindings) {
      const s = row["s"];
      const label = row["label"];
      if (s && s.type === "uri" && label) {
        hits.push({ iri: s.value, label: label.value });
      }
    }
    return hits;
  }
}

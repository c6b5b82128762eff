/**
 * Expansion orchestration: at most one request in flight per node, and
 * a canvas epoch acts as the request token. Responses that come back
 * after a reset belong to a previous epoch and are discarded unapplied.
 */

import type { ApiClient } from "./api.js";
import { CanvasGraph } from "./graph.js";
import { localName } from "./config.js";

export type ExpandOutcome =
  | "applied"
  | "in-flight"
  | "dead"
  | "stale"
  | "network-error"
  | "server-error";

export interface ControllerEvents {
  /** Structural change: nodes or edges were added, removed, or re-flagged. */
  onChange(): void;
  onToast(message: string, retry?: () => void): void;
}

export class ExplorerController {
  readonly graph = new CanvasGraph();
  private inflight = new Set<string>();
  private epoch = 0;
  private expandedOrder: string[] = [];

  constructor(
    private readonly api: ApiClient,
    private readonly events: ControllerEvents,
  ) {}

  /** IRIs expanded so far, in the order the user expanded them. */
  expandedIris(): string[] {
    return [...this.expandedOrder];
  }

  /** Place a node on the canvas and expand it. */
  async seed(iri: string): Promise<ExpandOutcome> {
    this.graph.ensureNode(iri);
    this.events.onChange();
    return this.expand(iri);
  }

  async expand(iri: string): Promise<ExpandOutcome> {
    if (this.inflight.has(iri)) {
      return "in-flight";
    }
    this.graph.ensureNode(iri);
    const epoch = this.epoch;
    this.inflight.add(iri);
    let result;
    try {
      result = await this.api.fetchNode(iri, "both");
    } catch {
      this.inflight.delete(iri);
      if (epoch === this.epoch) {
        this.events.onToast(
          `could not reach the server while expanding ${localName(iri)}`,
          () => {
            void this.expand(iri);
          },
        );
      }
      return "network-error";
    }
    this.inflight.delete(iri);
    if (epoch !== this.epoch) {
      return "stale";
    }
    if (result.kind === "missing") {
      this.graph.markDead(iri);
      this.events.onToast(`the server has no data about ${localName(iri)}`);
      this.events.onChange();
      return "dead";
    }
    if (result.kind === "error") {
      this.events.onToast(`server error ${result.status} while expanding`);
      return "server-error";
    }
    this.graph.applyNodeDoc(result.doc);
    if (!this.expandedOrder.includes(iri)) {
      this.expandedOrder.push(iri);
    }
    this.events.onChange();
    return "applied";
  }

  /** Drop the whole canvas; in-flight responses become stale. */
  reset(): void {
    this.epoch += 1;
    this.inflight.clear();
    this.expandedOrder = [];
    this.graph.clear();
    this.events.onChange();
  }
}

/**
 * Wires the controller, view, permalink, and layout loop together.
 * The URL fragment mirrors the set of expanded nodes, so any canvas can
 * be shared as a link and rebuilt by re-fetching each node.
 */

import type { ApiClient } from "./api.js";
import { ExplorerController } from "./controller.js";
import { layoutStep } from "./layout.js";
import { projectMarkers, type MapMarker } from "./map.js";
import { decodeFragment, encodeFragment } from "./permalink.js";
import { ExplorerView } from "./render.js";

const MAP_WIDTH = 300;
const MAP_HEIGHT = 200;
// Layout frames to run after a structural change before going idle.
const COOLING_FRAMES = 240;

export class ExplorerApp {
  readonly controller: ExplorerController;
  readonly view: ExplorerView;
  private selectedIri: string | null = null;
  private alpha = 0;
  private loopRunning = false;

  constructor(
    root: HTMLElement,
    private readonly api: ApiClient,
    private readonly win: Window,
  ) {
    this.view = new ExplorerView(root, {
      onExpand: (iri) => {
        void this.expandFromUi(iri);
      },
      onSelect: (iri) => {
        this.select(iri);
      },
      onSearch: (text) => {
        void this.search(text);
      },
      onPick: (iri) => {
        void this.addSeed(iri);
      },
      onLocate: (iri) => {
        this.focusMarker(iri);
      },
      onMarkerClick: (iri) => {
        this.select(iri);
      },
    });
    this.controller = new ExplorerController(api, {
      onChange: () => {
        this.onGraphChange();
      },
      onToast: (message, retry) => {
        this.view.showToast(message, retry);
      },
    });
  }

  async start(): Promise<void> {
    this.win.addEventListener("hashchange", () => {
      void this.loadFromFragment(true);
    });
    await this.loadFromFragment(false);
    this.startLoop();
  }

  /**
   * Rebuild the canvas from the fragment. A fragment that cannot be
   * parsed falls back to the landing view; an IRI the server does not
   * know stays on the canvas as a dead node while the rest load.
   */
  private async loadFromFragment(isNavigation: boolean): Promise<void> {
    const state = decodeFragment(this.win.location.hash);
    if (state.kind === "malformed") {
      this.replaceFragment("");
      if (isNavigation) {
        this.controller.reset();
      }
      this.view.showToast("could not read that link, starting fresh");
      this.view.focusSearch();
      return;
    }
    if (state.kind === "landing") {
      if (isNavigation) {
        this.controller.reset();
      }
      this.view.focusSearch();
      return;
    }
    if (isNavigation) {
      this.controller.reset();
    }
    for (const iri of state.iris) {
      await this.controller.expand(iri);
    }
  }

  private async expandFromUi(iri: string): Promise<void> {
    const outcome = await this.controller.expand(iri);
    if (outcome === "applied") {
      this.syncFragment();
    }
  }

  private async addSeed(iri: string): Promise<void> {
    this.view.clearSearchResults();
    const outcome = await this.controller.seed(iri);
    if (outcome === "applied") {
      this.syncFragment();
    }
    this.select(iri);
  }

  private async search(text: string): Promise<void> {
    let hits;
    try {
      hits = await this.api.searchLabels(text);
    } catch {
      this.view.showToast("search failed, is the server reachable?", () => {
        void this.search(text);
      });
      return;
    }
    this.view.renderSearchResults(hits);
  }

  private select(iri: string): void {
    this.selectedIri = iri;
    this.view.setSelected(iri);
    this.view.renderGraph(this.controller.graph);
    this.view.renderDetail(this.controller.graph.node(iri) ?? null);
  }

  private focusMarker(iri: string): void {
    this.view.renderMap(this.projectedMarkers(), iri);
  }

  private markers(): MapMarker[] {
    const out: MapMarker[] = [];
    for (const node of this.controller.graph.nodeList()) {
      if (node.geo) {
        out.push({ iri: node.iri, lat: node.geo.lat, lon: node.geo.lon });
      }
    }
    return out;
  }

  private projectedMarkers() {
    return projectMarkers(this.markers(), MAP_WIDTH, MAP_HEIGHT);
  }

  private onGraphChange(): void {
    this.view.renderGraph(this.controller.graph);
    this.view.renderMap(this.projectedMarkers());
    if (this.selectedIri) {
      this.view.renderDetail(
        this.controller.graph.node(this.selectedIri) ?? null,
      );
    }
    this.alpha = COOLING_FRAMES;
    this.startLoop();
  }

  private syncFragment(): void {
    this.replaceFragment(encodeFragment(this.controller.expandedIris()));
  }

  private replaceFragment(fragment: string): void {
    const { location, history } = this.win;
    history.replaceState(null, "", location.pathname + location.search + fragment);
  }

  /** Runs layout frames only while the graph is still settling. */
  private startLoop(): void {
    const raf = this.win.requestAnimationFrame?.bind(this.win);
    if (!raf || this.loopRunning) {
      return;
    }
    this.loopRunning = true;
    const frame = (): void => {
      if (this.alpha <= 0) {
        this.loopRunning = false;
        return;
      }
      this.alpha -= 1;
      layoutStep(this.controller.graph);
      this.view.tick(this.controller.graph);
      raf(frame);
    };
    raf(frame);
  }
}

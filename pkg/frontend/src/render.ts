/**
 * DOM view: SVG canvas, detail panel, map pane, search box, toasts.
 * Structure is rebuilt from the model on change; per-frame layout only
 * touches transforms. All state lives in the model objects, so a rebuild
 * never invents nodes or edges on its own.
 */

import { localName } from "./config.js";
import type { CanvasGraph } from "./graph.js";
import type { ProjectedMarker } from "./map.js";
import type { EdgeView, NodeView, SearchHit } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

const IMAGE_URL = /^https?:.*\.(jpe?g|png|gif|webp)$/i;

export interface ViewHandlers {
  onExpand(iri: string): void;
  onSelect(iri: string): void;
  onSearch(text: string): void;
  onPick(iri: string): void;
  onLocate(iri: string): void;
  onMarkerClick(iri: string): void;
}

interface DragState {
  iri: string;
  startX: number;
  startY: number;
  nodeX: number;
  nodeY: number;
}

function svgEl(tag: string): SVGElement {
  return document.createElementNS(SVG_NS, tag) as SVGElement;
}

function directionClass(edge: EdgeView): string {
  if (edge.direction === "sameAs") {
    return "dir-sameas";
  }
  return edge.direction === "in" ? "dir-in" : "dir-out";
}

export class ExplorerView {
  private canvas: SVGSVGElement;
  private edgeLayer: SVGGElement;
  private nodeLayer: SVGGElement;
  private panel: HTMLElement;
  private mapSvg: SVGSVGElement;
  private results: HTMLElement;
  private toasts: HTMLElement;
  private searchBox: HTMLInputElement;
  private selectedIri: string | null = null;
  private drag: DragState | null = null;
  private graph: CanvasGraph | null = null;

  constructor(
    private readonly root: HTMLElement,
    private readonly handlers: ViewHandlers,
  ) {
    root.innerHTML = `
      <header class="topbar">
        <h1>Cultural gems explorer</h1>
        <form id="search-form">
          <input id="search-box" type="search"
                 placeholder="search gems by label" autocomplete="off">
          <button type="submit">Search</button>
        </form>
      </header>
      <div class="workspace">
        <div class="canvas-wrap">
          <svg id="canvas" viewBox="-420 -300 840 600"
               preserveAspectRatio="xMidYMid meet">
            <g id="edge-layer"></g>
            <g id="node-layer"></g>
          </svg>
        </div>
        <aside class="sidebar">
          <div id="search-results" hidden></div>
          <section id="detail-panel">
            <p class="hint">Search for a gem, then expand nodes to walk
            the graph. Double-click a node to expand it.</p>
          </section>
          <section id="map-pane">
            <h2>Map</h2>
            <svg id="map" viewBox="0 0 300 200"></svg>
          </section>
        </aside>
      </div>
      <div id="toasts"></div>
    `;
    this.canvas = root.querySelector("#canvas") as SVGSVGElement;
    this.edgeLayer = root.querySelector("#edge-layer") as SVGGElement;
    this.nodeLayer = root.querySelector("#node-layer") as SVGGElement;
    this.panel = root.querySelector("#detail-panel") as HTMLElement;
    this.mapSvg = root.querySelector("#map") as SVGSVGElement;
    this.results = root.querySelector("#search-results") as HTMLElement;
    this.toasts = root.querySelector("#toasts") as HTMLElement;
    this.searchBox = root.querySelector("#search-box") as HTMLInputElement;

    const form = root.querySelector("#search-form") as HTMLFormElement;
    form.addEventListener("submit", (event) => {
      event.preventDefault();
      this.handlers.onSearch(this.searchBox.value);
    });
    this.canvas.addEventListener("mousemove", (event) => {
      this.onDragMove(event as MouseEvent);
    });
    this.canvas.addEventListener("mouseup", () => {
      this.drag = null;
    });
    this.canvas.addEventListener("mouseleave", () => {
      this.drag = null;
    });
  }

  focusSearch(): void {
    this.searchBox.focus();
  }

  setSelected(iri: string | null): void {
    this.selectedIri = iri;
  }

  /** Rebuild both SVG layers from the model, then position them. */
  renderGraph(graph: CanvasGraph): void {
    this.graph = graph;
    const edges = document.createDocumentFragment();
    for (const edge of graph.edgeList()) {
      edges.appendChild(this.buildEdge(edge));
    }
    this.edgeLayer.replaceChildren(edges);

    const nodes = document.createDocumentFragment();
    for (const node of graph.nodeList()) {
      nodes.appendChild(this.buildNode(graph, node));
    }
    this.nodeLayer.replaceChildren(nodes);
    this.tick(graph);
  }

  /** Update positions only; called once per layout frame. */
  tick(graph: CanvasGraph): void {
    for (const el of this.nodeLayer.children) {
      const iri = el.getAttribute("data-iri");
      const node = iri ? graph.node(iri) : undefined;
      if (node) {
        el.setAttribute("transform", `translate(${node.x},${node.y})`);
      }
    }
    for (const el of this.edgeLayer.children) {
      const from = graph.node(el.getAttribute("data-from") ?? "");
      const to = graph.node(el.getAttribute("data-to") ?? "");
      if (!from || !to) {
        continue;
      }
      const line = el.querySelector("line");
      if (line) {
        line.setAttribute("x1", String(from.x));
        line.setAttribute("y1", String(from.y));
        line.setAttribute("x2", String(to.x));
        line.setAttribute("y2", String(to.y));
      }
      const label = el.querySelector("text");
      if (label) {
        label.setAttribute("x", String((from.x + to.x) / 2));
        label.setAttribute("y", String((from.y + to.y) / 2 - 4));
      }
    }
  }

  private buildEdge(edge: EdgeView): SVGElement {
    const group = svgEl("g");
    group.setAttribute("class", `edge ${directionClass(edge)}`);
    group.setAttribute("data-from", edge.from);
    group.setAttribute("data-to", edge.to);
    group.setAttribute("data-predicate", edge.predicate);
    const line = svgEl("line");
    group.appendChild(line);
    const label = svgEl("text");
    label.setAttribute("class", "edge-label");
    label.textContent = localName(edge.predicate);
    group.appendChild(label);
    return group;
  }

  private buildNode(graph: CanvasGraph, node: NodeView): SVGElement {
    const group = svgEl("g");
    const classes = ["node", `kind-${node.kind}`];
    if (node.expanded) {
      classes.push("expanded");
    }
    if (node.dead) {
      classes.push("dead");
    }
    if (node.iri === this.selectedIri) {
      classes.push("selected");
    }
    group.setAttribute("class", classes.join(" "));
    group.setAttribute("data-iri", node.iri);

    const circle = svgEl("circle");
    circle.setAttribute("r", "16");
    group.appendChild(circle);

    const label = svgEl("text");
    label.setAttribute("class", "node-label");
    label.setAttribute("y", "32");
    label.textContent = node.label;
    group.appendChild(label);

    if (node.truncated) {
      const badge = svgEl("g");
      badge.setAttribute("class", "truncated-badge");
      badge.setAttribute("transform", "translate(10,-22)");
      const pill = svgEl("rect");
      pill.setAttribute("width", "34");
      pill.setAttribute("height", "14");
      pill.setAttribute("rx", "7");
      badge.appendChild(pill);
      const text = svgEl("text");
      text.setAttribute("x", "17");
      text.setAttribute("y", "11");
      text.textContent = "200+";
      badge.appendChild(text);
      group.appendChild(badge);
    }

    const literalGroup = graph.literalGroup(node.iri);
    if (literalGroup) {
      const chip = svgEl("g");
      chip.setAttribute("class", "literal-chip");
      chip.setAttribute("data-parent", node.iri);
      chip.setAttribute("transform", "translate(-22,-18)");
      const dot = svgEl("circle");
      dot.setAttribute("r", "9");
      chip.appendChild(dot);
      const count = svgEl("text");
      count.setAttribute("y", "3");
      count.textContent = String(node.literals.length);
      chip.appendChild(count);
      const title = svgEl("title");
      title.textContent = literalGroup.label;
      chip.appendChild(title);
      chip.addEventListener("click", (event) => {
        event.stopPropagation();
        this.handlers.onSelect(node.iri);
      });
      group.appendChild(chip);
    }

    group.addEventListener("click", () => {
      if (!this.drag) {
        this.handlers.onSelect(node.iri);
      }
    });
    group.addEventListener("dblclick", () => {
      this.handlers.onExpand(node.iri);
    });
    group.addEventListener("mousedown", (event) => {
      const e = event as MouseEvent;
      this.drag = {
        iri: node.iri,
        startX: e.clientX,
        startY: e.clientY,
        nodeX: node.x,
        nodeY: node.y,
      };
    });
    return group;
  }

  private onDragMove(event: MouseEvent): void {
    if (!this.drag || !this.graph) {
      return;
    }
    const node = this.graph.node(this.drag.iri);
    if (!node) {
      this.drag = null;
      return;
    }
    node.pinned = true;
    node.x = this.drag.nodeX + (event.clientX - this.drag.startX);
    node.y = this.drag.nodeY + (event.clientY - this.drag.startY);
    this.tick(this.graph);
  }

  renderDetail(node: NodeView | null): void {
    if (!node) {
      this.panel.innerHTML =
        '<p class="hint">Select a node to see its details.</p>';
      return;
    }
    this.panel.replaceChildren();

    const title = document.createElement("h2");
    title.textContent = node.label;
    this.panel.appendChild(title);

    const kindLine = document.createElement("p");
    kindLine.className = "kind-line";
    kindLine.textContent = node.dead
      ? `${node.kind} node (no data on this server)`
      : `${node.kind} node`;
    this.panel.appendChild(kindLine);

    const iriLine = document.createElement("p");
    iriLine.className = "iri-line";
    iriLine.textContent = node.iri;
    this.panel.appendChild(iriLine);

    const actions = document.createElement("div");
    actions.className = "actions";
    const expandBtn = document.createElement("button");
    expandBtn.id = "expand-btn";
    expandBtn.textContent = node.expanded ? "re-expand" : "expand";
    expandBtn.disabled = node.dead;
    expandBtn.addEventListener("click", () => {
      this.handlers.onExpand(node.iri);
    });
    actions.appendChild(expandBtn);
    const locateBtn = document.createElement("button");
    locateBtn.id = "locate-btn";
    locateBtn.textContent = "show on map";
    locateBtn.disabled = node.geo === null;
    locateBtn.addEventListener("click", () => {
      this.handlers.onLocate(node.iri);
    });
    actions.appendChild(locateBtn);
    this.panel.appendChild(actions);

    if (node.types.length > 0) {
      this.panel.appendChild(this.iriList("Types", "type-list", node.types));
    }
    if (node.literals.length > 0) {
      const heading = document.createElement("h3");
      heading.textContent = "Properties";
      this.panel.appendChild(heading);
      const dl = document.createElement("dl");
      dl.id = "literal-list";
      for (const entry of node.literals) {
        const dt = document.createElement("dt");
        dt.textContent = localName(entry.predicate);
        dl.appendChild(dt);
        const dd = document.createElement("dd");
        if (IMAGE_URL.test(entry.text)) {
          const img = document.createElement("img");
          img.className = "thumb";
          img.src = entry.text;
          img.alt = localName(entry.predicate);
          dd.appendChild(img);
        } else {
          dd.textContent = entry.text;
        }
        dl.appendChild(dd);
      }
      this.panel.appendChild(dl);
    }
    if (node.anonymous.length > 0) {
      const heading = document.createElement("h3");
      heading.textContent = "Anonymous values";
      this.panel.appendChild(heading);
      const ul = document.createElement("ul");
      ul.className = "anon-list";
      for (const arc of node.anonymous) {
        const li = document.createElement("li");
        li.textContent = `${localName(arc.predicate)}: ${arc.label}`;
        ul.appendChild(li);
      }
      this.panel.appendChild(ul);
    }
    if (node.types.length === 0 && node.literals.length === 0 && !node.expanded) {
      const hint = document.createElement("p");
      hint.className = "hint";
      hint.textContent = "Not expanded yet.";
      this.panel.appendChild(hint);
    }
  }

  private iriList(
    heading: string,
    className: string,
    iris: string[],
  ): HTMLElement {
    const wrap = document.createElement("div");
    const h = document.createElement("h3");
    h.textContent = heading;
    wrap.appendChild(h);
    const ul = document.createElement("ul");
    ul.className = className;
    for (const iri of iris) {
      const li = document.createElement("li");
      const button = document.createElement("button");
      button.setAttribute("data-iri", iri);
      button.textContent = localName(iri);
      button.title = iri;
      button.addEventListener("click", () => {
        this.handlers.onSelect(iri);
      });
      li.appendChild(button);
      ul.appendChild(li);
    }
    wrap.appendChild(ul);
    return wrap;
  }

  renderMap(markers: ProjectedMarker[], focus: string | null = null): void {
    const frag = document.createDocumentFragment();
    for (const marker of markers) {
      const dot = svgEl("circle");
      const classes = ["map-marker"];
      if (marker.iri === focus) {
        classes.push("focused");
      }
      dot.setAttribute("class", classes.join(" "));
      dot.setAttribute("data-iri", marker.iri);
      dot.setAttribute("cx", String(marker.x));
      dot.setAttribute("cy", String(marker.y));
      dot.setAttribute("r", marker.iri === focus ? "7" : "5");
      dot.addEventListener("click", () => {
        this.handlers.onMarkerClick(marker.iri);
      });
      frag.appendChild(dot);
    }
    this.mapSvg.replaceChildren(frag);
  }

  renderSearchResults(hits: SearchHit[]): void {
    this.results.hidden = false;
    this.results.replaceChildren();
    if (hits.length === 0) {
      const p = document.createElement("p");
      p.className = "hint";
      p.textContent = "No matches.";
      this.results.appendChild(p);
      return;
    }
    const ul = document.createElement("ul");
    ul.className = "hit-list";
    for (const hit of hits) {
      const li = document.createElement("li");
      const button = document.createElement("button");
      button.setAttribute("data-iri", hit.iri);
      button.textContent = hit.label;
      button.title = hit.iri;
      button.addEventListener("click", () => {
        this.handlers.onPick(hit.iri);
      });
      li.appendChild(button);
      ul.appendChild(li);
    }
    this.results.appendChild(ul);
  }

  clearSearchResults(): void {
    this.results.hidden = true;
    this.results.replaceChildren();
  }

  showToast(message: string, retry?: () => void): void {
    const toast = document.createElement("div");
    toast.className = "toast";
    const text = document.createElement("span");
    text.textContent = message;
    toast.appendChild(text);
    if (retry) {
      const button = document.createElement("button");
      button.className = "retry";
      button.textContent = "retry";
      button.addEventListener("click", () => {
        toast.remove();
        retry();
      });
      toast.appendChild(button);
    }
    this.toasts.appendChild(toast);
    setTimeout(() => toast.remove(), 8000);
  }
}

/**
 * Small force-directed layout: pairwise repulsion, springs along edges,
 * a weak pull toward the origin. Positions are in canvas coordinates
 * centered on (0, 0); the view applies the viewport transform.
 */

import type { CanvasGraph } from "./graph.js";

export interface LayoutOptions {
  spring: number;
  springStrength: number;
  repulsion: number;
  centerPull: number;
  damping: number;
  maxSpeed: number;
}

export const DEFAULT_LAYOUT: LayoutOptions = {
  spring: 130,
  springStrength: 0.02,
  repulsion: 9000,
  centerPull: 0.004,
  damping: 0.82,
  maxSpeed: 18,
};

export function layoutStep(
  graph: CanvasGraph,
  opts: LayoutOptions = DEFAULT_LAYOUT,
): void {
  const nodes = graph.nodeList();
  for (let i = 0; i < nodes.length; i++) {
    for (let j = i + 1; j < nodes.length; j++) {
      const a = nodes[i];
      const b = nodes[j];
      let dx = b.x - a.x;
      let dy = b.y - a.y;
      let d2 = dx * dx + dy * dy;
      if (d2 < 1) {
        // Coincident nodes get a deterministic nudge apart.
        dx = 1;
        dy = 1;
        d2 = 2;
      }
      const force = opts.repulsion / d2;
      const d = Math.sqrt(d2);
      const fx = (dx / d) * force;
      const fy = (dy / d) * force;
      a.vx -= fx;
      a.vy -= fy;
      b.vx += fx;
      b.vy += fy;
    }
  }
  for (const edge of graph.edgeList()) {
    const a = graph.node(edge.from);
    const b = graph.node(edge.to);
    if (!a || !b) {
      continue;
    }
    const dx = b.x - a.x;
    const dy = b.y - a.y;
    const d = Math.sqrt(dx * dx + dy * dy) || 1;
    const stretch = (d - opts.spring) * opts.springStrength;
    const fx = (dx / d) * stretch;
    const fy = (dy / d) * stretch;
    a.vx += fx;
    a.vy += fy;
    b.vx -= fx;
    b.vy -= fy;
  }
  for (const node of nodes) {
    node.vx -= node.x * opts.centerPull;
    node.vy -= node.y * opts.centerPull;
    node.vx *= opts.damping;
    node.vy *= opts.damping;
    const speed = Math.sqrt(node.vx * node.vx + node.vy * node.vy);
    if (speed > opts.maxSpeed) {
      node.vx = (node.vx / speed) * opts.maxSpeed;
      node.vy = (node.vy / speed) * opts.maxSpeed;
    }
    if (node.pinned) {
      node.vx = 0;
      node.vy = 0;
      continue;
    }
    node.x += node.vx;
    node.y += node.vy;
  }
}

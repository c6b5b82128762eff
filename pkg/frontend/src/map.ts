/**
 * Minimal map pane: an equirectangular projection fitted to the bounding
 * box of the current markers. No tiles, no network; enough to show that
 * nearby gems land at visibly different positions.
 */

export interface MapMarker {
  iri: string;
  lat: number;
  lon: number;
}

export interface ProjectedMarker {
  iri: string;
  x: number;
  y: number;
}

// Spans below this (in degrees, about 50 m) are widened so a lone marker
// or a pair of identical coordinates still centers instead of dividing
// by zero.
const MIN_SPAN = 0.0005;

export function projectMarkers(
  markers: MapMarker[],
  width: number,
  height: number,
  pad = 20,
): ProjectedMarker[] {
  if (markers.length === 0) {
    return [];
  }
  const midLat =
    markers.reduce((acc, m) => acc + m.lat, 0) / markers.length;
  const stretch = Math.cos((midLat * Math.PI) / 180);
  const xs = markers.map((m) => m.lon * stretch);
  const ys = markers.map((m) => m.lat);
  let minX = Math.min(...xs);
  let maxX = Math.max(...xs);
  let minY = Math.min(...ys);
  let maxY = Math.max(...ys);
  if (maxX - minX < MIN_SPAN) {
    const cx = (maxX + minX) / 2;
    minX = cx - MIN_SPAN / 2;
    maxX = cx + MIN_SPAN / 2;
  }
  if (maxY - minY < MIN_SPAN) {
    const cy = (maxY + minY) / 2;
    minY = cy - MIN_SPAN / 2;
    maxY = cy + MIN_SPAN / 2;
  }
  const scale = Math.min(
    (width - 2 * pad) / (maxX - minX),
    (height - 2 * pad) / (maxY - minY),
  );
  const offsetX = (width - (maxX - minX) * scale) / 2;
  const offsetY = (height - (maxY - minY) * scale) / 2;
  return markers.map((m, i) => ({
    iri: m.iri,
    x: offsetX + (xs[i] - minX) * scale,
    y: offsetY + (maxY - ys[i]) * scale,
  }));
}

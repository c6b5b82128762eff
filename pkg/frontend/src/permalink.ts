/**
 * Canvas state in the URL fragment: `#expand=<iri>,<iri>,...` with each
 * IRI percent-encoded. Loading such a URL re-expands the listed nodes.
 */

export type FragmentState =
  | { kind: "landing" }
  | { kind: "expand"; iris: string[] }
  | { kind: "malformed" };

const PREFIX = "expand=";

export function encodeFragment(expanded: string[]): string {
  if (expanded.length === 0) {
    return "";
  }
  return "#" + PREFIX + expanded.map(encodeURIComponent).join(",");
}

export function decodeFragment(fragment: string): FragmentState {
  const raw = fragment.startsWith("#") ? fragment.slice(1) : fragment;
  if (raw === "") {
    return { kind: "landing" };
  }
  if (!raw.startsWith(PREFIX)) {
    return { kind: "malformed" };
  }
  const body = raw.slice(PREFIX.length);
  if (body === "") {
    return { kind: "landing" };
  }
  const iris: string[] = [];
  for (const part of body.split(",")) {
    let decoded: string;
    try {
      decoded = decodeURIComponent(part);
    } catch {
      return { kind: "malformed" };
    }
    if (decoded === "" || !decoded.includes(":")) {
      return { kind: "malformed" };
    }
    iris.push(decoded);
  }
  return { kind: "expand", iris };
}

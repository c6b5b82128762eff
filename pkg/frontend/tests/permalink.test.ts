import { describe, expect, it } from "vitest";

import { decodeFragment, encodeFragment } from "../src/permalink.js";

const A = "https://culturalgems.jrc.ec.europa.eu/resource/cultural-gems/27213";
const B = "http://dbpedia.org/resource/Museu_do_Fado";
// Commas and hash marks must survive the round trip via percent-encoding.
const TRICKY = "https://example.org/a,b#c";

describe("encodeFragment", () => {
  it("maps an empty canvas to the base URL", () => {
    expect(encodeFragment([])).toBe("");
  });

  it("lists three expanded IRIs", () => {
    const frag = encodeFragment([A, B, TRICKY]);
    expect(frag.startsWith("#expand=")).toBe(true);
    expect(frag.split(",").length).toBe(3);
  });
});

describe("decodeFragment", () => {
  it("round-trips through encode", () => {
    const iris = [A, B, TRICKY];
    const state = decodeFragment(encodeFragment(iris));
    expect(state).toEqual({ kind: "expand", iris });
  });

  it("treats an absent fragment as the landing view", () => {
    expect(decodeFragment("")).toEqual({ kind: "landing" });
    expect(decodeFragment("#")).toEqual({ kind: "landing" });
    expect(decodeFragment("#expand=")).toEqual({ kind: "landing" });
  });

  it("rejects an unknown fragment key", () => {
    expect(decodeFragment("#view=table")).toEqual({ kind: "malformed" });
  });

  it("rejects broken percent-encoding", () => {
    expect(decodeFragment("#expand=%ZZ")).toEqual({ kind: "malformed" });
  });

  it("rejects entries that are not absolute IRIs", () => {
    expect(decodeFragment("#expand=notaniri")).toEqual({ kind: "malformed" });
    expect(decodeFragment(`#expand=${encodeURIComponent(A)},`)).toEqual({
      kind: "malformed",
    });
  });
});

// @vitest-environment happy-dom

import { describe, expect, it, vi } from "vitest";

import type { SessionState } from "../src/api";
import { ApiClient } from "../src/api";
import { View } from "../src/render";
import { PlaygroundStore } from "../src/state";

function session(): SessionState {
  return {
    session_id: "t",
    area: 4,
    score: 0,
    board: { cells: [[1, 1], [1, 2], [2, 1], [2, 2]] },
    switches: [
      { id: "row:1", cells: [[1, 1], [1, 2]], sign: 1 },
      { id: "row:2", cells: [[2, 1], [2, 2]], sign: -1 },
      { id: "col:1", cells: [[1, 1], [2, 1]], sign: 1 },
      { id: "col:2", cells: [[1, 2], [2, 2]], sign: 1 },
    ],
    config: { cells: [[1, 1, 1], [1, 2, 1], [2, 1, 1], [2, 2, 1]] },
    effective: { cells: [[1, 1, 1], [1, 2, 1], [2, 1, -1], [2, 2, -1]] },
    history: ["row:2"],
    seed: null,
  };
}

function mount(): { store: PlaygroundStore; root: HTMLElement } {
  const store = new PlaygroundStore(new ApiClient("http://unused"), { strictChecks: true });
  const root = document.createElement("div");
  document.body.appendChild(root);
  new View(root, store);
  return { store, root };
}

function show(store: PlaygroundStore, state: SessionState): void {
  // push a snapshot through the same path the network responses use
  (store as unknown as { accept(s: SessionState): void }).accept(state);
}

describe("View", () => {
  it("renders the score from the server snapshot", () => {
    const { store, root } = mount();
    show(store, session());
    expect(root.querySelector(".score-value")?.textContent).toBe("0");
    expect(root.querySelector(".score-area")?.textContent).toContain("4 cells");
  });

  it("draws one triangle per row and column, rows left and columns top", () => {
    const { store, root } = mount();
    show(store, session());
    const rows = root.querySelectorAll(".tri-row");
    const cols = root.querySelectorAll(".tri-col");
    expect(rows).toHaveLength(2);
    expect(cols).toHaveLength(2);
    expect(rows[0]!.closest(".edge")!.className).toContain("left");
    expect(cols[0]!.closest(".edge")!.className).toContain("top");
  });

  it("puts row 1 at the bottom of the grid", () => {
    const { store, root } = mount();
    show(store, session());
    const cells = [...root.querySelectorAll(".cell")];
    // grid emits top row first: row 2 is negated, row 1 all plus
    expect(cells.slice(0, 2).map((c) => c.textContent)).toEqual(["−", "−"]);
    expect(cells.slice(2).map((c) => c.textContent)).toEqual(["+", "+"]);
  });

  it("clicking a row triangle issues the flip", () => {
    const { store, root } = mount();
    show(store, session());
    const spy = vi.spyOn(store, "flip").mockResolvedValue();
    const tri = root.querySelector<HTMLButtonElement>(".tri-row")!;
    tri.click();
    expect(spy).toHaveBeenCalledWith("row:2"); // row 2 renders first (top)
  });

  it("marks the hinted switch and the overlay's pending switches", () => {
    const { store, root } = mount();
    show(store, session());
    store.state = {
      ...store.state,
      hint: { switchId: "row:2", gain: 4 },
      overlay: {
        value: 4,
        assignment: { "col:1": -1 },
        exact: true,
        nodes_explored: 16,
        pending: ["col:1"],
      },
    };
    (store as unknown as { emit(): void }).emit();

    expect(root.querySelector<HTMLElement>(".hinted")!.title).toContain("row:2");
    expect(root.querySelectorAll(".overlay-pending")).toHaveLength(1);
    expect(root.querySelector(".badge")!.textContent).toBe("exact");
    expect(root.querySelector(".hint-line")!.textContent).toContain("+4");
  });

  it("shows a dismissible banner with a recreate prompt when stale", () => {
    const { store, root } = mount();
    show(store, session());
    store.state = { ...store.state, banner: "session is gone", stale: true };
    (store as unknown as { emit(): void }).emit();

    const banner = root.querySelector(".banner")!;
    expect(banner.textContent).toContain("session is gone");
    expect([...banner.querySelectorAll("button")].map((b) => b.textContent)).toContain("recreate");

    root.querySelector<HTMLButtonElement>(".banner .close")!.click();
    expect(store.state.banner).toBeNull();
  });

  it("animates cells whose effective sign changed since the last snapshot", () => {
    const { store, root } = mount();
    const before = session();
    show(store, before);
    const after = session();
    after.switches[2]!.sign = -1; // col:1 engaged
    after.history = ["row:2", "col:1"];
    after.effective = { cells: [[1, 1, -1], [1, 2, 1], [2, 1, 1], [2, 2, -1]] };
    show(store, after);
    const flipped = [...root.querySelectorAll(".just-flipped")];
    expect(flipped).toHaveLength(2); // the two cells col:1 covers
  });
});

import { describe, expect, it } from "vitest";

import type { SessionState } from "../src/api";
import { crossCheckScore, effectiveSigns, flipGain, scoreOf } from "../src/evaluator";

// 2x2 board, one row flipped: row 2 is negated
function fixture(): SessionState {
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

describe("effectiveSigns", () => {
  it("negates exactly the cells covered by engaged switches", () => {
    const signs = effectiveSigns(fixture().config.cells, fixture().switches);
    expect(signs.get("1,1")).toBe(1);
    expect(signs.get("1,2")).toBe(1);
    expect(signs.get("2,1")).toBe(-1);
    expect(signs.get("2,2")).toBe(-1);
  });

  it("double negation cancels", () => {
    const state = fixture();
    state.switches[1]!.sign = -1;
    state.switches[2]!.sign = -1; // col:1 also engaged
    const signs = effectiveSigns(state.config.cells, state.switches);
    expect(signs.get("1,1")).toBe(-1); // col only
    expect(signs.get("2,1")).toBe(1); // row and col cancel
    expect(signs.get("2,2")).toBe(-1); // row only
  });

  it("rejects a switch covering a cell outside the config", () => {
    const state = fixture();
    state.switches[1]!.cells.push([9, 9]);
    expect(() => effectiveSigns(state.config.cells, state.switches)).toThrow(/unknown cell/);
  });
});

describe("scoreOf / crossCheckScore", () => {
  it("sums effective signs", () => {
    expect(scoreOf(fixture())).toBe(0);
  });

  it("accepts a matching server score", () => {
    expect(crossCheckScore(fixture())).toEqual({ ok: true });
  });

  it("flags a mismatched server score", () => {
    const state = fixture();
    state.score = 2;
    expect(crossCheckScore(state)).toEqual({ ok: false, reported: 2, computed: 0 });
  });
});

describe("flipGain", () => {
  it("predicts the delta of a single flip", () => {
    // flipping row:2 back restores all +1: gain is +4 - 0
    expect(flipGain(fixture(), "row:2")).toBe(4);
    // flipping row:1 sends the two +1 cells negative
    expect(flipGain(fixture(), "row:1")).toBe(-4);
    // columns currently sum to 0 each
    expect(flipGain(fixture(), "col:1")).toBe(0);
  });

  it("throws on an unknown id", () => {
    expect(() => flipGain(fixture(), "diag:1")).toThrow(/unknown switch/);
  });
});

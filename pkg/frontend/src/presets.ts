// Canned positions for the new-game form.

import type { CreateSessionRequest } from "./api";

export type BoardKind =
  | "square"
  | "x_board"
  | "rotated_square"
  | "disk"
  | "hyperbola"
  | "cube";

export type NewGameForm = {
  kind: BoardKind;
  n: number;
  t: number | null; // slanted_plus_rows slope
  a: number | null; // restricted column count
  b: number | null; // restricted row count
  switches: string | null; // switch kind override, default per board
  seed: number | null; // null = all +1 deal
};

export const DEFAULT_FORM: NewGameForm = {
  kind: "square",
  n: 5,
  t: null,
  a: null,
  b: null,
  switches: null,
  seed: 1,
};

export function formToRequest(form: NewGameForm): CreateSessionRequest {
  const params: Record<string, number> = { n: form.n };
  const req: CreateSessionRequest = {
    board_spec: { kind: form.kind, params },
  };
  if (form.switches) {
    const sw: Record<string, unknown> = { kind: form.switches };
    const swParams: Record<string, number> = {};
    if (form.t !== null) swParams.t = form.t;
    if (form.a !== null) swParams.a = form.a;
    if (form.b !== null) swParams.b = form.b;
    if (Object.keys(swParams).length > 0) sw.params = swParams;
    req.switch_spec = sw;
  }
  if (form.seed !== null) req.config = { random: form.seed };
  return req;
}

// 5x5 demonstration deal whose score is 5 before any switch is flipped
const DEMO_CELLS: number[][] = [
  [1, 1, 1], [1, 2, 1], [1, 3, 1], [1, 4, 1], [1, 5, 1],
  [2, 1, -1], [2, 2, -1], [2, 3, -1], [2, 4, -1], [2, 5, -1],
  [3, 1, -1], [3, 2, 1], [3, 3, 1], [3, 4, -1], [3, 5, 1],
  [4, 1, 1], [4, 2, 1], [4, 3, -1], [4, 4, 1], [4, 5, 1],
  [5, 1, -1], [5, 2, 1], [5, 3, 1], [5, 4, -1], [5, 5, 1],
];

export const DEMO_PRESET: CreateSessionRequest = {
  board_spec: { kind: "square", params: { n: 5 } },
  config: { cells: DEMO_CELLS },
};

export const DEMO_PRESET_SCORE = 5;

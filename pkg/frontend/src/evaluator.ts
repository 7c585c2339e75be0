// Client-side cross-check of the server's arithmetic. The UI never
// displays a score computed here; it only verifies the one it was sent.

import type { SessionState, SwitchState, SignedCell } from "./api";

export function cellKey(cell: number[]): string {
  return cell.join(",");
}

// effective sign per cell: dealt sign times the product of the signs of
// every switch covering the cell
export function effectiveSigns(
  config: SignedCell[],
  switches: SwitchState[],
): Map<string, number> {
  const signs = new Map<string, number>();
  for (const entry of config) {
    const sign = entry[entry.length - 1]!;
    signs.set(cellKey(entry.slice(0, -1)), sign);
  }
  for (const sw of switches) {
    if (sw.sign === 1) continue;
    for (const cell of sw.cells) {
      const key = cellKey(cell);
      const current = signs.get(key);
      if (current === undefined) {
        throw new Error(`switch ${sw.id} covers unknown cell ${key}`);
      }
      signs.set(key, -current);
    }
  }
  return signs;
}

export function scoreOf(state: SessionState): number {
  let total = 0;
  for (const sign of effectiveSigns(state.config.cells, state.switches).values()) {
    total += sign;
  }
  return total;
}

// score delta if this one switch were flipped now: -2 * (its effective sum)
export function flipGain(state: SessionState, switchId: string): number {
  const sw = state.switches.find((s) => s.id === switchId);
  if (!sw) throw new Error(`unknown switch ${switchId}`);
  const signs = effectiveSigns(state.config.cells, state.switches);
  let sum = 0;
  for (const cell of sw.cells) sum += signs.get(cellKey(cell))!;
  return sum === 0 ? 0 : -2 * sum;
}

export type CrossCheck =
  | { ok: true }
  | { ok: false; reported: number; computed: number };

export function crossCheckScore(state: SessionState): CrossCheck {
  const computed = scoreOf(state);
  if (computed === state.score) return { ok: true };
  return { ok: false, reported: state.score, computed };
}

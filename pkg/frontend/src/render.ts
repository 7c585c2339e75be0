// DOM rendering. Full redraw per state change; boards are small enough
// that diffing would be noise. Orientation matches the CLI grids: row 1
// at the bottom, column 1 on the left.

import type { SessionState, SwitchState } from "./api";
import { cellKey, effectiveSigns } from "./evaluator";
import type { PlaygroundStore, ViewState } from "./state";
import type { BoardKind, NewGameForm } from "./presets";
import { DEMO_PRESET } from "./presets";

const BOARD_KINDS: BoardKind[] = [
  "square",
  "x_board",
  "rotated_square",
  "disk",
  "hyperbola",
  "cube",
];

const SWITCH_KINDS = [
  "",
  "rows_cols",
  "diag_plus_cols",
  "slanted_plus_rows",
  "restricted",
  "cube_lines",
];

function el<K extends keyof HTMLElementTagNameMap>(
  doc: Document,
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = doc.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function axisRange(cells: number[][], axis: number): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const c of cells) {
    const v = c[axis]!;
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  return [lo, hi];
}

type Handlers = {
  cellsOf: Map<string, HTMLElement[]>;
  handleOf: Map<string, HTMLElement[]>;
};

function bindHover(handle: HTMLElement, sw: SwitchState, layout: Handlers): void {
  const covered = () =>
    sw.cells.flatMap((c) => layout.cellsOf.get(cellKey(c)) ?? []);
  handle.addEventListener("mouseenter", () => {
    for (const node of covered()) node.classList.add("line-hover");
  });
  handle.addEventListener("mouseleave", () => {
    for (const node of covered()) node.classList.remove("line-hover");
  });
}

function switchTitle(sw: SwitchState, view: ViewState): string {
  const hinted = view.hint?.switchId === sw.id ? ` (hint: ${view.hint.gain >= 0 ? "+" : ""}${view.hint.gain})` : "";
  return `${sw.id} = ${sw.sign > 0 ? "+1" : "-1"}${hinted}`;
}

function decorateHandle(node: HTMLElement, sw: SwitchState, view: ViewState): void {
  if (sw.sign < 0) node.classList.add("engaged");
  if (view.hint?.switchId === sw.id) node.classList.add("hinted");
  if (view.overlay?.pending.includes(sw.id)) node.classList.add("overlay-pending");
  node.title = switchTitle(sw, view);
}

// one 2D slice of the board; cube boards render one per k layer
function renderSlice(
  doc: Document,
  store: PlaygroundStore,
  view: ViewState,
  session: SessionState,
  sliceCells: number[][],
  flipped: Set<string>,
  layout: Handlers,
  withTriangles: boolean,
): HTMLElement {
  const eff = effectiveSigns(session.config.cells, session.switches);
  const [iLo, iHi] = axisRange(sliceCells, 0);
  const [jLo, jHi] = axisRange(sliceCells, 1);
  const present = new Set(sliceCells.map((c) => cellKey(c.slice(0, 2))));
  const prefix = sliceCells[0]!.length > 2 ? sliceCells[0]!.slice(2) : [];

  const grid = el(doc, "div", "board-grid");
  grid.style.gridTemplateColumns = `repeat(${jHi - jLo + 1 + (withTriangles ? 1 : 0)}, var(--cell))`;

  const rowSwitches = new Map(
    session.switches.filter((s) => s.id.startsWith("row:")).map((s) => [s.id, s]),
  );
  const colSwitches = new Map(
    session.switches.filter((s) => s.id.startsWith("col:")).map((s) => [s.id, s]),
  );

  const addHandle = (parent: HTMLElement, sw: SwitchState, cls: string, label: string) => {
    const btn = el(doc, "button", cls, label);
    decorateHandle(btn, sw, view);
    btn.addEventListener("click", () => void store.flip(sw.id));
    bindHover(btn, sw, layout);
    const nodes = layout.handleOf.get(sw.id) ?? [];
    nodes.push(btn);
    layout.handleOf.set(sw.id, nodes);
    parent.appendChild(btn);
  };

  if (withTriangles) {
    // top edge: one column triangle per column, over an empty corner
    grid.appendChild(el(doc, "div", "corner"));
    for (let j = jLo; j <= jHi; j++) {
      const holder = el(doc, "div", "edge top");
      const sw = colSwitches.get(`col:${j}`);
      if (sw) addHandle(holder, sw, "tri tri-col", "▾");
      grid.appendChild(holder);
    }
  }

  for (let i = iHi; i >= iLo; i--) {
    if (withTriangles) {
      const holder = el(doc, "div", "edge left");
      const sw = rowSwitches.get(`row:${i}`);
      if (sw) addHandle(holder, sw, "tri tri-row", "▸");
      grid.appendChild(holder);
    }
    for (let j = jLo; j <= jHi; j++) {
      const key2 = cellKey([i, j]);
      if (!present.has(key2)) {
        grid.appendChild(el(doc, "div", "cell absent"));
        continue;
      }
      const full = cellKey([i, j, ...prefix]);
      const sign = eff.get(full)!;
      const node = el(doc, "div", `cell ${sign > 0 ? "plus" : "minus"}`, sign > 0 ? "+" : "−");
      if (flipped.has(full)) node.classList.add("just-flipped");
      const nodes = layout.cellsOf.get(full) ?? [];
      nodes.push(node);
      layout.cellsOf.set(full, nodes);
      grid.appendChild(node);
    }
  }

  // non row/col switches hang off their first covered cell in this slice
  for (const sw of session.switches) {
    if (sw.id.startsWith("row:") || sw.id.startsWith("col:")) continue;
    const entry = sw.cells[0]!;
    const host = (layout.cellsOf.get(cellKey(entry)) ?? []).find((n) => grid.contains(n));
    if (!host) continue;
    const btn = el(doc, "button", "handle", sw.id.split(":")[0]!.slice(0, 1));
    decorateHandle(btn, sw, view);
    btn.addEventListener("click", (ev) => {
      ev.stopPropagation();
      void store.flip(sw.id);
    });
    bindHover(btn, sw, layout);
    const nodes = layout.handleOf.get(sw.id) ?? [];
    nodes.push(btn);
    layout.handleOf.set(sw.id, nodes);
    host.appendChild(btn);
  }

  return grid;
}

function renderBoard(
  doc: Document,
  store: PlaygroundStore,
  view: ViewState,
  session: SessionState,
  flipped: Set<string>,
): HTMLElement {
  const wrap = el(doc, "div", "board");
  const layout: Handlers = { cellsOf: new Map(), handleOf: new Map() };
  const dim = session.board.cells[0]?.length ?? 2;
  if (dim <= 2) {
    wrap.appendChild(
      renderSlice(doc, store, view, session, session.board.cells, flipped, layout, true),
    );
    return wrap;
  }
  // cube: k slices left to right, k growing
  const ks = [...new Set(session.board.cells.map((c) => c[2]!))].sort((a, b) => a - b);
  for (const k of ks) {
    const slice = session.board.cells.filter((c) => c[2] === k);
    const holder = el(doc, "div", "slice");
    holder.appendChild(el(doc, "div", "slice-label", `k = ${k}`));
    holder.appendChild(renderSlice(doc, store, view, session, slice, flipped, layout, false));
    wrap.appendChild(holder);
  }
  return wrap;
}

function sparkline(doc: Document, scores: number[]): SVGSVGElement {
  const ns = "http://www.w3.org/2000/svg";
  const svg = doc.createElementNS(ns, "svg");
  svg.setAttribute("class", "sparkline");
  svg.setAttribute("viewBox", "0 0 120 32");
  if (scores.length >= 2) {
    const lo = Math.min(...scores);
    const hi = Math.max(...scores);
    const span = hi - lo || 1;
    const pts = scores
      .map((s, idx) => {
        const x = (idx / (scores.length - 1)) * 116 + 2;
        const y = 29 - ((s - lo) / span) * 26;
        return `${x.toFixed(1)},${y.toFixed(1)}`;
      })
      .join(" ");
    const line = doc.createElementNS(ns, "polyline");
    line.setAttribute("points", pts);
    svg.appendChild(line);
  }
  return svg;
}

function numberInput(
  doc: Document,
  label: string,
  value: number | null,
  onChange: (v: number | null) => void,
): HTMLElement {
  const wrap = el(doc, "label", "field", label + " ");
  const input = el(doc, "input");
  input.type = "number";
  input.value = value === null ? "" : String(value);
  input.addEventListener("change", () => {
    onChange(input.value === "" ? null : Number(input.value));
  });
  wrap.appendChild(input);
  return wrap;
}

function renderForm(doc: Document, store: PlaygroundStore, view: ViewState): HTMLElement {
  const form = el(doc, "div", "new-game");
  const f = view.form;
  const set = (patch: Partial<NewGameForm>) => store.setForm({ ...store.state.form, ...patch });

  const kind = el(doc, "select");
  for (const k of BOARD_KINDS) {
    const opt = el(doc, "option", undefined, k);
    opt.value = k;
    if (k === f.kind) opt.selected = true;
    kind.appendChild(opt);
  }
  kind.addEventListener("change", () => set({ kind: kind.value as BoardKind }));
  const kindField = el(doc, "label", "field", "board ");
  kindField.appendChild(kind);
  form.appendChild(kindField);

  form.appendChild(numberInput(doc, "n", f.n, (v) => set({ n: v ?? 1 })));

  const sw = el(doc, "select");
  for (const k of SWITCH_KINDS) {
    const opt = el(doc, "option", undefined, k === "" ? "(default)" : k);
    opt.value = k;
    if ((f.switches ?? "") === k) opt.selected = true;
    sw.appendChild(opt);
  }
  sw.addEventListener("change", () => set({ switches: sw.value || null }));
  const swField = el(doc, "label", "field", "switches ");
  swField.appendChild(sw);
  form.appendChild(swField);

  form.appendChild(numberInput(doc, "t", f.t, (v) => set({ t: v })));
  form.appendChild(numberInput(doc, "a", f.a, (v) => set({ a: v })));
  form.appendChild(numberInput(doc, "b", f.b, (v) => set({ b: v })));
  form.appendChild(numberInput(doc, "seed", f.seed, (v) => set({ seed: v })));

  const go = el(doc, "button", "primary", "new game");
  go.addEventListener("click", () => void store.newGame());
  form.appendChild(go);

  const demo = el(doc, "button", undefined, "demo deal");
  demo.addEventListener("click", () => void store.create(DEMO_PRESET));
  form.appendChild(demo);

  return form;
}

function renderPanel(doc: Document, store: PlaygroundStore, view: ViewState): HTMLElement {
  const panel = el(doc, "div", "panel");
  const session = view.session;
  if (!session) return panel;

  const score = el(doc, "div", "score");
  score.appendChild(el(doc, "span", "score-value", String(session.score)));
  score.appendChild(el(doc, "span", "score-area", ` / ${session.area} cells`));
  panel.appendChild(score);
  panel.appendChild(sparkline(doc, view.scores));

  const actions = el(doc, "div", "actions");
  const hintBtn = el(doc, "button", undefined, "hint");
  hintBtn.addEventListener("click", () => void store.hint());
  actions.appendChild(hintBtn);

  const undoBtn = el(doc, "button", undefined, "undo");
  undoBtn.disabled = session.history.length === 0;
  undoBtn.addEventListener("click", () => void store.undo());
  actions.appendChild(undoBtn);

  const solveBtn = el(doc, "button", undefined, "solve");
  solveBtn.addEventListener("click", () => void store.solve());
  actions.appendChild(solveBtn);
  panel.appendChild(actions);

  if (view.hint) {
    const text = view.hint.switchId
      ? `flip ${view.hint.switchId} for ${view.hint.gain >= 0 ? "+" : ""}${view.hint.gain}`
      : "no single flip gains anything";
    panel.appendChild(el(doc, "div", "hint-line", text));
  }

  if (view.overlay) {
    const box = el(doc, "div", "overlay");
    box.appendChild(el(doc, "span", "badge " + (view.overlay.exact ? "exact" : "heuristic"),
      view.overlay.exact ? "exact" : "heuristic"));
    box.appendChild(el(doc, "span", undefined, ` best ${view.overlay.value}`));
    box.appendChild(el(doc, "span", "muted",
      ` (${view.overlay.pending.length} flips away)`));
    const apply = el(doc, "button", undefined, "apply");
    apply.disabled = view.overlay.pending.length === 0;
    apply.addEventListener("click", () => void store.applyOverlay());
    box.appendChild(apply);
    const clear = el(doc, "button", undefined, "clear");
    clear.addEventListener("click", () => store.clearOverlay());
    box.appendChild(clear);
    panel.appendChild(box);
  }

  if (session.history.length > 0) {
    panel.appendChild(el(doc, "div", "history", "moves: " + session.history.join(" ")));
  }
  return panel;
}

export class View {
  private doc: Document;
  private root: HTMLElement;
  private store: PlaygroundStore;
  private prevEffective = new Map<string, number>();

  constructor(root: HTMLElement, store: PlaygroundStore) {
    this.root = root;
    this.doc = root.ownerDocument;
    this.store = store;
    store.subscribe(() => this.render(store.state));
    this.render(store.state);
  }

  private flippedSince(session: SessionState): Set<string> {
    const next = effectiveSigns(session.config.cells, session.switches);
    const changed = new Set<string>();
    for (const [key, sign] of next) {
      const prev = this.prevEffective.get(key);
      if (prev !== undefined && prev !== sign) changed.add(key);
    }
    this.prevEffective = next;
    return changed;
  }

  render(view: ViewState): void {
    const doc = this.doc;
    this.root.replaceChildren();

    if (view.banner) {
      const banner = el(doc, "div", "banner", view.banner + " ");
      if (view.stale) {
        const again = el(doc, "button", undefined, "recreate");
        again.addEventListener("click", () => void this.store.recreate());
        banner.appendChild(again);
      }
      const close = el(doc, "button", "close", "×");
      close.addEventListener("click", () => this.store.dismissBanner());
      banner.appendChild(close);
      this.root.appendChild(banner);
    }

    this.root.appendChild(renderForm(doc, this.store, view));

    if (view.session) {
      const flipped = this.flippedSince(view.session);
      this.root.appendChild(renderPanel(doc, this.store, view));
      this.root.appendChild(renderBoard(doc, this.store, view, view.session, flipped));
    } else {
      this.root.appendChild(el(doc, "div", "empty", "no game yet"));
    }
  }
}

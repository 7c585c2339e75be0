// View state and the action layer that keeps it in sync with the service.
// The service owns the game; every mutation round-trips through it and the
// snapshot it returns is what gets displayed. A local evaluator re-derives
// the score after each snapshot purely as a consistency check.

import { ApiClient, ApiError } from "./api";
import type { CreateSessionRequest, SessionState, SolveResponse } from "./api";
import { crossCheckScore } from "./evaluator";
import { DEFAULT_FORM, formToRequest } from "./presets";
import type { NewGameForm } from "./presets";

export type HintHighlight = {
  switchId: string | null;
  gain: number;
};

export type SolveOverlay = SolveResponse & {
  // ids whose sign differs from the optimal assignment right now
  pending: string[];
};

export type ViewState = {
  form: NewGameForm;
  session: SessionState | null;
  busy: boolean;
  hint: HintHighlight | null;
  overlay: SolveOverlay | null;
  scores: number[]; // score after each snapshot, drives the sparkline
  banner: string | null;
  stale: boolean; // session vanished server-side; offer to recreate
};

export type Listener = (state: ViewState) => void;

function pendingFlips(session: SessionState, assignment: Record<string, number>): string[] {
  return session.switches
    .filter((sw) => (assignment[sw.id] ?? 1) !== sw.sign)
    .map((sw) => sw.id);
}

export class PlaygroundStore {
  private api: ApiClient;
  private listeners: Listener[] = [];
  // throw on a score mismatch instead of showing a banner
  strictChecks: boolean;
  state: ViewState;
  private lastRequest: CreateSessionRequest | null = null;

  constructor(api: ApiClient, opts: { strictChecks?: boolean } = {}) {
    this.api = api;
    this.strictChecks = opts.strictChecks ?? false;
    this.state = {
      form: { ...DEFAULT_FORM },
      session: null,
      busy: false,
      hint: null,
      overlay: null,
      scores: [],
      banner: null,
      stale: false,
    };
  }

  subscribe(fn: Listener): () => void {
    this.listeners.push(fn);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== fn);
    };
  }

  private emit(): void {
    for (const fn of this.listeners) fn(this.state);
  }

  private patch(partial: Partial<ViewState>): void {
    this.state = { ...this.state, ...partial };
    this.emit();
  }

  setForm(form: NewGameForm): void {
    this.patch({ form });
  }

  dismissBanner(): void {
    this.patch({ banner: null });
  }

  private fail(err: unknown): void {
    if (err instanceof ApiError && err.status === 404 && this.state.session) {
      this.patch({
        stale: true,
        busy: false,
        banner: "session is gone on the server; start a new game to continue",
      });
      return;
    }
    const message = err instanceof Error ? err.message : String(err);
    this.patch({ banner: message, busy: false });
    if (this.strictChecks && !(err instanceof ApiError)) throw err;
  }

  private accept(session: SessionState): void {
    const check = crossCheckScore(session);
    if (!check.ok) {
      const msg =
        `score mismatch: server says ${check.reported}, ` +
        `local evaluator says ${check.computed}`;
      if (this.strictChecks) throw new Error(msg);
      this.patch({ banner: msg });
    }
    const overlay = this.state.overlay
      ? { ...this.state.overlay, pending: pendingFlips(session, this.state.overlay.assignment) }
      : null;
    this.patch({
      session,
      overlay,
      hint: null,
      scores: [...this.state.scores, session.score],
      stale: false,
      busy: false,
    });
  }

  async create(req: CreateSessionRequest): Promise<void> {
    this.patch({ busy: true, banner: null, overlay: null, hint: null, scores: [] });
    try {
      const res = await this.api.createSession(req);
      this.lastRequest = req;
      this.accept(res.state);
    } catch (err) {
      this.fail(err);
    }
  }

  async newGame(): Promise<void> {
    await this.create(formToRequest(this.state.form));
  }

  // rebuild after the server lost the session (same request, fresh deal id)
  async recreate(): Promise<void> {
    if (!this.lastRequest) return;
    await this.create(this.lastRequest);
  }

  async flip(switchId: string): Promise<void> {
    const session = this.state.session;
    if (!session || this.state.busy) return;
    this.patch({ busy: true });
    try {
      this.accept(await this.api.flip(session.session_id, switchId));
    } catch (err) {
      this.fail(err);
    }
  }

  async undo(): Promise<void> {
    const session = this.state.session;
    if (!session || session.history.length === 0 || this.state.busy) return;
    this.patch({ busy: true });
    try {
      this.accept(await this.api.undo(session.session_id));
    } catch (err) {
      this.fail(err);
    }
  }

  async hint(): Promise<void> {
    const session = this.state.session;
    if (!session) return;
    try {
      const res = await this.api.hint(session.session_id);
      this.patch({ hint: { switchId: res.switch_id, gain: res.gain } });
    } catch (err) {
      this.fail(err);
    }
  }

  async solve(): Promise<void> {
    const session = this.state.session;
    if (!session) return;
    this.patch({ busy: true });
    try {
      const res = await this.api.solve(session.session_id);
      this.patch({
        overlay: { ...res, pending: pendingFlips(session, res.assignment) },
        busy: false,
      });
    } catch (err) {
      this.fail(err);
    }
  }

  clearOverlay(): void {
    this.patch({ overlay: null });
  }

  // walk the overlay's remaining flips one by one; ends at its value
  async applyOverlay(): Promise<void> {
    const overlay = this.state.overlay;
    if (!overlay) return;
    for (const id of [...overlay.pending]) {
      await this.flip(id);
      if (this.state.banner || this.state.stale) return;
    }
  }
}
